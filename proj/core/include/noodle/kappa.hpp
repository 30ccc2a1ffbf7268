#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "noodle/enumeration.hpp"
#include "noodle/faces.hpp"
#include "noodle/numeric.hpp"

namespace noodle {

/// Truncation parameters for the shape series: meanders/shapes up to
/// half-size k_max, each ell variable capped at l_max.
struct TruncationSpec {
  int k_max = 3;
  int l_max = 30;
};

/// Source of enumerated meanders and partial shapes, by half-size. The
/// disk-backed implementation lives in cache.hpp; throws ResourceError
/// when an enumeration is not available.
class EnumerationSource {
 public:
  virtual ~EnumerationSource() = default;
  virtual std::vector<Meander> meanders(int k) = 0;
  virtual std::vector<PartialShape> shapes(int k) = 0;
};

/// In-memory source that enumerates on demand.
class DirectEnumerationSource : public EnumerationSource {
 public:
  explicit DirectEnumerationSource(int meander_cap = kMeanderEnumerationCap,
                                   int shape_cap = kPartialShapeEnumerationCap)
      : meander_cap_(meander_cap), shape_cap_(shape_cap) {}
  std::vector<Meander> meanders(int k) override { return enumerate_meanders(k, meander_cap_); }
  std::vector<PartialShape> shapes(int k) override { return enumerate_partial_shapes(k, shape_cap_); }

 private:
  int meander_cap_;
  int shape_cap_;
};

/// Truncated face-product series of a decomposition: the sum over ell
/// vectors in [0, l_max]^gaps of prod_F w_F(ell_{I(F)}) with
/// w = Cat_s 4^{-s} for bounded faces and C(2s,s) 4^{-s} for open faces.
/// The sum factorizes over connected blocks of the gap-face incidence
/// graph (which refines the odd/even parity split); a gap lies under at
/// most two faces, so a block is a tree of faces and is evaluated by
/// 1-D convolutions in O(faces * l_max^2). A lone gap under a lone
/// Catalan face telescopes to exactly 2 and that value is used directly.
/// Always a lower bound of the infinite series, nondecreasing in l_max.
Dyadic face_product_sum(const FaceDecomposition& d, int l_max);

/// Same quantity through the second algebraic route: a plain odometer over
/// the block's ell vectors. Exponential in the block dimension; for
/// cross-checks at small sizes.
Dyadic face_product_sum_reference(const FaceDecomposition& d, int l_max);

/// Truncated P(S0 = C) for a meander C of half-size k:
/// 2^(1-4k) * k * face_product_sum. Rigorous lower bound.
Dyadic prob_shape_lower(const Meander& c, int l_max);

/// Truncated P(P0 = P) for a partial shape on 2k+1 points:
/// 2^(-4k-2) * face_product_sum with the two open faces weighted by
/// central binomials. Rigorous lower bound.
Dyadic prob_shape_upper_term(const PartialShape& p, int l_max);

struct PerKContribution {
  int k = 0;
  std::int64_t items = 0;  // meanders or shapes of this half-size
  Rational value;          // contribution to the bound
};

struct BoundsReport {
  Rational lower;
  Rational upper;
  TruncationSpec spec;
  std::vector<PerKContribution> lower_per_k;
  std::vector<PerKContribution> upper_per_k;
};

/// Lower bound: sum over k <= k_max of (1/k) sum over meanders of the
/// truncated P(S0 = C). Guaranteed <= kappa.
Rational kappa_lower(const TruncationSpec& spec, EnumerationSource& source, int threads = 0,
                     std::vector<PerKContribution>* per_k = nullptr);

/// Upper bound: 2 * (1/4 - sum over k <= k_max over shapes of truncated
/// P(P0 = P)). Guaranteed >= kappa; k_max = 0 yields exactly 1/2.
Rational kappa_upper(const TruncationSpec& spec, EnumerationSource& source, int threads = 0,
                     std::vector<PerKContribution>* per_k = nullptr);

BoundsReport kappa_bounds(const TruncationSpec& spec, EnumerationSource& source, int threads = 0);

}  // namespace noodle
