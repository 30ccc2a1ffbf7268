#include "noodle/systems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "noodle/errors.hpp"
#include "noodle/union_find.hpp"

namespace noodle {

PairSystem::PairSystem(Word upper, Word lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.lo() != 0 || lower_.lo() != 0) {
    throw InvariantError("PairSystem: words must start at position 0");
  }
  if (upper_.size() != lower_.size() || upper_.size() % 2 != 0) {
    throw InvariantError("PairSystem: words must have equal even length");
  }
  if (!is_balanced(upper_) || !is_balanced(lower_)) {
    throw InvariantError("PairSystem: both words must be balanced");
  }
  n_ = upper_.size() / 2;
}

PartialSystem::PartialSystem(PartialMatching upper, PartialMatching lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.domain() != lower_.domain()) {
    throw InvariantError("PartialSystem: sides must share the same domain");
  }
}

PartialSystem PartialSystem::from_words(const Word& upper, const Word& lower) {
  if (upper.domain() != lower.domain()) {
    throw InvariantError("PartialSystem: words must share the same domain");
  }
  return PartialSystem(word_to_matching(upper), word_to_matching(lower));
}

PartialSystem PartialSystem::shifted(Pos delta) const {
  return PartialSystem(upper_.shifted(delta), lower_.shifted(delta));
}

namespace {

ComponentStats components_of_matchings(const PartialMatching& upper, const PartialMatching& lower) {
  Interval dom = upper.domain();
  auto n = static_cast<std::size_t>(dom.length());
  UnionFind uf(n);
  for (const auto& side : {std::cref(upper), std::cref(lower)}) {
    for (const auto& [a, b] : side.get().pairs()) {
      uf.merge(static_cast<std::size_t>(a - dom.lo), static_cast<std::size_t>(b - dom.lo));
    }
  }
  ComponentStats stats;
  stats.lo = dom.lo;
  stats.count = static_cast<std::int64_t>(uf.count());
  stats.component_of.resize(n);
  // Canonical id: minimum position of the component. A forward sweep sees
  // each root's minimum first.
  std::vector<Pos> root_min(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (root_min[r] < 0) root_min[r] = dom.lo + static_cast<Pos>(i);
    stats.component_of[i] = root_min[r];
  }
  std::map<Pos, std::int64_t> size_by_id;
  for (std::size_t i = 0; i < n; ++i) ++size_by_id[stats.component_of[i]];
  for (const auto& [id, sz] : size_by_id) stats.sizes.push_back(sz);
  std::sort(stats.sizes.begin(), stats.sizes.end());
  return stats;
}

}  // namespace

ComponentStats components(const PairSystem& s) {
  return components_of_matchings(word_to_matching(s.upper()), word_to_matching(s.lower()));
}

ComponentStats components(const PartialSystem& s) {
  return components_of_matchings(s.upper(), s.lower());
}

std::pair<Rational, Rational> cc_expectation_identity(const PairSystem& s) {
  ComponentStats stats = components(s);
  Rational lhs(stats.count, s.n());
  std::map<Pos, std::int64_t> size_by_id;
  for (Pos p = 0; p < 2 * s.n(); ++p) ++size_by_id[stats.component_id(p)];
  Rational sum(0);
  for (Pos p = 0; p < 2 * s.n(); ++p) {
    sum += Rational(2, size_by_id[stats.component_id(p)]);
  }
  Rational rhs = sum * Rational(1, 2 * s.n());
  return {lhs, rhs};
}

PartialSystem restrict(const PartialSystem& s, Interval sub) {
  return PartialSystem(restrict(s.upper(), sub), restrict(s.lower(), sub));
}

bool equivalent_up_to_shift(const MarkedSystem& a, const MarkedSystem& b) {
  Pos delta = b.mark - a.mark;
  return a.system.domain().lo + delta == b.system.domain().lo &&
         a.system.shifted(delta) == b.system;
}

Rational marked_system_distance(const MarkedSystem& a, const MarkedSystem& b) {
  if (!a.system.domain().contains(a.mark) || !b.system.domain().contains(b.mark)) {
    throw std::domain_error("marked_system_distance: mark outside domain");
  }
  MarkedWord ua{a.system.upper_word(), a.mark};
  MarkedWord ub{b.system.upper_word(), b.mark};
  MarkedWord la{a.system.lower_word(), a.mark};
  MarkedWord lb{b.system.lower_word(), b.mark};
  // The system restriction is the pair of word restrictions, so the largest
  // agreeing radius is the min over the two sides.
  Rational du = marked_word_distance(ua, ub);
  Rational dl = marked_word_distance(la, lb);
  return du > dl ? du : dl;
}

namespace {

std::pair<Word, Word> relabeled_words(const std::vector<Pos>& points, const LetterFn& upper,
                                      const LetterFn& lower) {
  if (points.empty()) throw std::domain_error("extract shape: empty point set");
  if (!std::is_sorted(points.begin(), points.end()) ||
      std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::domain_error("extract shape: points must be strictly increasing");
  }
  std::vector<Letter> up, low;
  up.reserve(points.size());
  low.reserve(points.size());
  for (Pos p : points) {
    up.push_back(upper(p));
    low.push_back(lower(p));
  }
  return {Word(0, std::move(up)), Word(0, std::move(low))};
}

}  // namespace

PartialSystem extract_partial_system(const std::vector<Pos>& points, const LetterFn& upper,
                                     const LetterFn& lower) {
  auto [up, low] = relabeled_words(points, upper, lower);
  return PartialSystem::from_words(up, low);
}

PairSystem extract_pair_system(const std::vector<Pos>& points, const LetterFn& upper,
                               const LetterFn& lower) {
  auto [up, low] = relabeled_words(points, upper, lower);
  return PairSystem(up, low);
}

}  // namespace noodle
