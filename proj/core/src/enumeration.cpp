#include "noodle/enumeration.hpp"

#include <string>

#include "noodle/errors.hpp"
#include "noodle/union_find.hpp"

namespace noodle {

namespace {

void gen_balanced(int open, int closed, int k, std::vector<Letter>& prefix,
                  std::vector<Word>& out) {
  if (open + closed == 2 * k) {
    out.emplace_back(0, prefix);
    return;
  }
  if (open < k) {
    prefix.push_back(Letter::L);
    gen_balanced(open + 1, closed, k, prefix, out);
    prefix.pop_back();
  }
  if (closed < open) {
    prefix.push_back(Letter::R);
    gen_balanced(open, closed + 1, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> balanced_words(int k) {
  if (k < 0) throw std::domain_error("balanced_words: k < 0");
  std::vector<Word> out;
  std::vector<Letter> prefix;
  prefix.reserve(static_cast<std::size_t>(2 * k));
  gen_balanced(0, 0, k, prefix, out);
  return out;
}

std::vector<PartialMatching> enumerate_noncrossing_matchings(int k, int cap) {
  if (k < 0) throw std::domain_error("enumerate_noncrossing_matchings: k < 0");
  if (k > cap) {
    throw ResourceError("enumerate_noncrossing_matchings: k exceeds cap " + std::to_string(cap));
  }
  std::vector<PartialMatching> out;
  for (const Word& w : balanced_words(k)) out.push_back(word_to_matching(w));
  return out;
}

Meander::Meander(PairSystem system) : system_(std::move(system)) {
  if (components(system_).count != 1) {
    throw InvariantError("Meander: system must have exactly one component");
  }
}

std::vector<Meander> enumerate_meanders(int k, int cap) {
  if (k < 1) throw std::domain_error("enumerate_meanders: k < 1");
  if (k > cap) {
    throw ResourceError("enumerate_meanders: k exceeds cap " + std::to_string(cap));
  }
  std::vector<Word> words = balanced_words(k);
  // Partner tables once per word; the pair loop only runs union-find.
  std::vector<std::vector<Pos>> partners(words.size(), std::vector<Pos>(2 * k));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (Pos p = 0; p < 2 * k; ++p) partners[i][static_cast<std::size_t>(p)] = *partner(words[i], p);
  }
  std::vector<Meander> out;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      UnionFind uf(static_cast<std::size_t>(2 * k));
      for (Pos p = 0; p < 2 * k; ++p) {
        uf.merge(static_cast<std::size_t>(p), static_cast<std::size_t>(partners[a][p]));
        uf.merge(static_cast<std::size_t>(p), static_cast<std::size_t>(partners[b][p]));
      }
      if (uf.count() == 1) out.emplace_back(PairSystem(words[a], words[b]));
    }
  }
  return out;
}

namespace {

// Exactly one singleton on the given side; returns it.
std::optional<std::pair<Pos, Letter>> sole_singleton(const PartialMatching& m) {
  auto singles = m.singletons();
  if (singles.size() != 1) return std::nullopt;
  return singles[0];
}

bool connected(const PartialSystem& s) {
  auto n = static_cast<std::size_t>(s.domain().length());
  UnionFind uf(n);
  Pos lo = s.domain().lo;
  for (const auto& [a, b] : s.upper().pairs()) {
    uf.merge(static_cast<std::size_t>(a - lo), static_cast<std::size_t>(b - lo));
  }
  for (const auto& [a, b] : s.lower().pairs()) {
    uf.merge(static_cast<std::size_t>(a - lo), static_cast<std::size_t>(b - lo));
  }
  return uf.count() == 1;
}

// Minimality: in the restriction to [0, 2k-1], the component of 0 must not
// contain a position holding an R-singleton (on either side).
bool restriction_minimal(const PartialSystem& s) {
  Interval window{0, s.domain().hi - 1};
  if (window.empty()) return true;
  PartialSystem res = restrict(s, window);
  ComponentStats stats = components(res);
  Pos id0 = stats.component_id(0);
  for (const auto& side : {res.upper(), res.lower()}) {
    for (const auto& [p, dec] : side.singletons()) {
      if (dec == Letter::R && stats.component_id(p) == id0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_partial_shape(const PartialSystem& s) {
  if (s.domain().lo != 0 || s.domain().length() % 2 == 0 || s.domain().length() < 3) return false;
  auto up = sole_singleton(s.upper());
  auto low = sole_singleton(s.lower());
  if (!up || !low) return false;
  if (up->second == low->second) return false;  // one L and one R overall
  return connected(s) && restriction_minimal(s);
}

PartialShape::PartialShape(PartialSystem system) : system_(std::move(system)) {
  if (!is_partial_shape(system_)) {
    throw InvariantError("PartialShape: shape conditions violated");
  }
  upper_singleton_ = *sole_singleton(system_.upper());
  lower_singleton_ = *sole_singleton(system_.lower());
}

std::vector<PartialShape> enumerate_partial_shapes(int k, int cap) {
  if (k < 1) throw std::domain_error("enumerate_partial_shapes: k < 1");
  if (k > cap) {
    throw ResourceError("enumerate_partial_shapes: k exceeds cap " + std::to_string(cap));
  }
  const Pos m = 2 * k + 1;
  std::vector<PartialShape> out;
  // Words with exactly one singleton, in lexicographic order.
  std::vector<Word> candidates;
  std::vector<Letter> letters(static_cast<std::size_t>(m));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (Pos i = 0; i < m; ++i) {
      letters[static_cast<std::size_t>(i)] =
          (mask >> (m - 1 - i)) & 1 ? Letter::R : Letter::L;
    }
    Word w(0, letters);
    if (word_to_matching(w).singletons().size() == 1) candidates.push_back(w);
  }
  for (const Word& up : candidates) {
    for (const Word& low : candidates) {
      PartialSystem s = PartialSystem::from_words(up, low);
      if (is_partial_shape(s)) out.emplace_back(PartialShape(s));
    }
  }
  return out;
}

}  // namespace noodle
