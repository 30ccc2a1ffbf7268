#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "noodle/systems.hpp"
#include "noodle/words.hpp"

namespace noodle {

inline constexpr int kMatchingEnumerationCap = 14;
inline constexpr int kMeanderEnumerationCap = 8;
inline constexpr int kPartialShapeEnumerationCap = 6;

/// All balanced words of length 2k on [0, 2k-1], lexicographic (L < R).
std::vector<Word> balanced_words(int k);

/// All Cat_k complete non-crossing matchings on 2k points, in the
/// lexicographic order of their words.
std::vector<PartialMatching> enumerate_noncrossing_matchings(int k, int cap = kMatchingEnumerationCap);

/// A meandric system with exactly one component.
class Meander {
 public:
  explicit Meander(PairSystem system);
  const PairSystem& system() const { return system_; }
  std::int64_t half_size() const { return system_.n(); }
  std::int64_t points() const { return 2 * system_.n(); }
  Meander mirrored() const { return Meander(PairSystem(system_.lower(), system_.upper())); }
  bool operator==(const Meander&) const = default;

 private:
  PairSystem system_;
};

/// All meanders of half-size k (2k points), ordered by (upper, lower) word.
std::vector<Meander> enumerate_meanders(int k, int cap = kMeanderEnumerationCap);

/// A connected partial meandric system on [0, 2k] with exactly one
/// singleton per side (one L, one R overall) that is minimal: its
/// restriction to [0, 2k-1] does not connect 0 to an R-singleton.
class PartialShape {
 public:
  explicit PartialShape(PartialSystem system);

  const PartialSystem& system() const { return system_; }
  std::int64_t half_size() const { return (system_.domain().length() - 1) / 2; }
  std::int64_t points() const { return system_.domain().length(); }
  std::pair<Pos, Letter> upper_singleton() const { return upper_singleton_; }
  std::pair<Pos, Letter> lower_singleton() const { return lower_singleton_; }
  PartialShape mirrored() const {
    return PartialShape(PartialSystem(system_.lower(), system_.upper()));
  }
  bool operator==(const PartialShape&) const = default;

 private:
  PartialSystem system_;
  std::pair<Pos, Letter> upper_singleton_;
  std::pair<Pos, Letter> lower_singleton_;
};

/// Membership test for the shape family above (the constructor's
/// invariants, without throwing).
bool is_partial_shape(const PartialSystem& s);

/// All shapes on 2k+1 points, by exhaustive filter over the 4^(2k+1)
/// letter assignments, ordered by (upper, lower) word.
std::vector<PartialShape> enumerate_partial_shapes(int k, int cap = kPartialShapeEnumerationCap);

}  // namespace noodle
