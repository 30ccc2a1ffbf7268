#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noodle/numeric.hpp"

namespace noodle {

using Pos = std::int64_t;

enum class Letter : std::uint8_t { L, R };

inline char to_char(Letter l) { return l == Letter::L ? 'L' : 'R'; }
Letter letter_from_char(char c);

/// Closed integer interval [lo, hi]; empty iff lo > hi.
struct Interval {
  Pos lo = 0;
  Pos hi = -1;

  bool empty() const { return lo > hi; }
  Pos length() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(Pos p) const { return p >= lo && p <= hi; }
  bool contains(const Interval& o) const { return o.empty() || (o.lo >= lo && o.hi <= hi); }
  static Interval intersection(const Interval& a, const Interval& b) {
    return Interval{a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
  }
  bool operator==(const Interval&) const = default;
};

/// A word over {L, R} on a finite integer interval. Words are immutable
/// values; all positions carry explicit integers so that restriction and
/// marked shifts need no re-indexing.
class Word {
 public:
  Word() = default;
  Word(Pos lo, std::vector<Letter> letters) : lo_(lo), letters_(std::move(letters)) {}
  static Word from_string(std::string_view s, Pos lo = 0);

  Interval domain() const { return Interval{lo_, lo_ + size() - 1}; }
  Pos size() const { return static_cast<Pos>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter at(Pos p) const;
  const std::vector<Letter>& letters() const { return letters_; }
  Pos lo() const { return lo_; }

  Word shifted(Pos delta) const { return Word(lo_ + delta, letters_); }
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  Pos lo_ = 0;
  std::vector<Letter> letters_;
};

/// A partial matching on an interval: pairs plus decorated singletons
/// (L: partner lies to the right of the domain, R: to the left).
/// Invariant: non-crossing in the sense that no pair crosses another pair,
/// no singleton sits strictly inside a pair, and no L-singleton precedes
/// an R-singleton.
class PartialMatching {
 public:
  PartialMatching() = default;
  /// Validates the partition and the non-crossing invariant.
  PartialMatching(Interval domain, const std::vector<std::pair<Pos, Pos>>& pairs,
                  const std::vector<std::pair<Pos, Letter>>& singletons);

  Interval domain() const { return dom_; }
  Pos size() const { return dom_.length(); }
  bool is_complete() const;

  std::optional<Pos> partner_of(Pos p) const;
  std::optional<Letter> singleton_decoration(Pos p) const;

  std::vector<std::pair<Pos, Pos>> pairs() const;
  std::vector<std::pair<Pos, Letter>> singletons() const;

  PartialMatching shifted(Pos delta) const;

  bool operator==(const PartialMatching&) const = default;

 private:
  friend PartialMatching word_to_matching(const Word&);

  static constexpr Pos kSingletonL = INT64_MIN;
  static constexpr Pos kSingletonR = INT64_MIN + 1;

  Interval dom_;
  std::vector<Pos> link_;  // partner position, or a singleton sentinel
};

struct MarkedWord {
  Word word;
  Pos mark = 0;
};

/// True iff w has equal L/R counts and every prefix has #L >= #R.
bool is_balanced(const Word& w);

/// #L - #R among letters at positions <= i; i may be lo-1 (yielding 0).
std::int64_t height(const Word& w, Pos i);

/// The unique non-crossing partial matching whose word is w: pairs are
/// matched parenthesis-wise, unmatched L's become L-singletons and
/// unmatched R's become R-singletons.
PartialMatching word_to_matching(const Word& w);

/// Inverse of word_to_matching: w(i) = L iff i is an L-singleton or the
/// smaller element of its pair.
Word matching_to_word(const PartialMatching& m);

/// Matched position of i under the parenthesis matching of w, or nullopt
/// if i is a singleton. Single stack sweep, O(n).
std::optional<Pos> partner(const Word& w, Pos i);

Word restrict(const Word& w, Interval sub);

/// Pairs fully inside are kept; half-cut pairs become singletons decorated
/// L (partner to the right) or R (partner to the left). Commutes with the
/// word bijection.
PartialMatching restrict(const PartialMatching& m, Interval sub);

bool equivalent_up_to_shift(const MarkedWord& a, const MarkedWord& b);

/// 1/(1 + max k such that the radius-k restrictions around the marks are
/// equivalent up to shift); 0 if fully equivalent, 1 if the letters at the
/// marks differ.
Rational marked_word_distance(const MarkedWord& a, const MarkedWord& b);

}  // namespace noodle
