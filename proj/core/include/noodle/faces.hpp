#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "noodle/enumeration.hpp"

namespace noodle {

enum class SystemSide : std::uint8_t { Upper, Lower };

/// One face of a meander drawing: the region between an arc, the axis and
/// the arc's directly nested children. `gaps` lists the indices g of axis
/// segments [g, g+1] on the face boundary (0-based: gap g sits between
/// points g and g+1). Weights: bounded faces carry Catalan weights in the
/// shape series, open faces (F0/Finf of a partial shape) central-binomial
/// weights.
struct Face {
  SystemSide side;
  Pos left = 0;
  Pos right = 0;
  std::vector<std::int64_t> gaps;
  bool open = false;

  bool operator==(const Face&) const = default;
};

struct FaceDecomposition {
  std::vector<Face> bounded;
  /// (F0, Finf): F0 belongs to the virtual arc closing the R-singleton
  /// leftward through -1, Finf to the one closing the L-singleton rightward.
  std::optional<std::pair<Face, Face>> open_faces;
  std::int64_t gap_count = 0;  // ell variables: 2k-1 for closed, 2k for open
  std::int64_t half_size = 0;

  std::vector<const Face*> all_faces() const;
};

/// Faces of a closed meander of half-size k: exactly 2k of them, one per
/// arc; every gap 0..2k-2 appears in one or two of them and each face's
/// gap set is all-even or all-odd.
FaceDecomposition faces(const Meander& c);

/// Faces of a partial shape completed with its two virtual arcs
/// (L-singleton -> 2k+1 on its side, -1 -> R-singleton on its side).
/// Sentinel gaps -1 and 2k are fixed to zero in the series and are dropped
/// from the reported gap sets.
FaceDecomposition open_faces(const PartialShape& p);

}  // namespace noodle
