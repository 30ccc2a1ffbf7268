#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "noodle/numeric.hpp"
#include "noodle/words.hpp"

namespace noodle {

/// A meandric system of size n: two balanced words of length 2n read as
/// non-crossing matchings drawn above and below the axis, on points
/// 0..2n-1.
class PairSystem {
 public:
  PairSystem(Word upper, Word lower);

  std::int64_t n() const { return n_; }
  const Word& upper() const { return upper_; }
  const Word& lower() const { return lower_; }
  Interval domain() const { return upper_.domain(); }

  bool operator==(const PairSystem&) const = default;

 private:
  std::int64_t n_;
  Word upper_;
  Word lower_;
};

/// A partial meandric system: two non-crossing partial matchings on the
/// same interval.
class PartialSystem {
 public:
  PartialSystem(PartialMatching upper, PartialMatching lower);
  static PartialSystem from_words(const Word& upper, const Word& lower);

  Interval domain() const { return upper_.domain(); }
  const PartialMatching& upper() const { return upper_; }
  const PartialMatching& lower() const { return lower_; }
  Word upper_word() const { return matching_to_word(upper_); }
  Word lower_word() const { return matching_to_word(lower_); }

  PartialSystem shifted(Pos delta) const;

  bool operator==(const PartialSystem&) const = default;

 private:
  PartialMatching upper_;
  PartialMatching lower_;
};

struct MarkedSystem {
  PartialSystem system;
  Pos mark = 0;
};

/// Connected components of the multigraph whose edges are the pairs of
/// both matchings. Component ids are canonicalized as the minimum position
/// in the component.
struct ComponentStats {
  std::int64_t count = 0;
  std::vector<std::int64_t> sizes;  // ascending
  Pos lo = 0;
  std::vector<Pos> component_of;  // indexed by position - lo

  Pos component_id(Pos p) const { return component_of[static_cast<std::size_t>(p - lo)]; }
};

ComponentStats components(const PairSystem& s);
ComponentStats components(const PartialSystem& s);

/// Both sides of the exact identity cc(s)/n == average over points of
/// 2/|component of the point|, computed independently in exact rational
/// arithmetic.
std::pair<Rational, Rational> cc_expectation_identity(const PairSystem& s);

PartialSystem restrict(const PartialSystem& s, Interval sub);

bool equivalent_up_to_shift(const MarkedSystem& a, const MarkedSystem& b);

/// Same metric as marked_word_distance, evaluated on the pair of sides;
/// equals the max of the two marked-word distances.
Rational marked_system_distance(const MarkedSystem& a, const MarkedSystem& b);

using LetterFn = std::function<Letter(Pos)>;

/// Relabels the given points by the unique increasing bijection onto
/// 0..|points|-1 and re-reads the letters there, yielding the shape of a
/// component. `points` must be sorted ascending and nonempty.
PartialSystem extract_partial_system(const std::vector<Pos>& points, const LetterFn& upper,
                                     const LetterFn& lower);

/// Shape of a finite closed component; the relabeled words are balanced.
PairSystem extract_pair_system(const std::vector<Pos>& points, const LetterFn& upper,
                               const LetterFn& lower);

}  // namespace noodle
