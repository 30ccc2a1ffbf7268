#include "noodle/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "noodle/errors.hpp"

namespace noodle {

Letter letter_from_char(char c) {
  if (c == 'L') return Letter::L;
  if (c == 'R') return Letter::R;
  throw std::domain_error("letter_from_char: expected 'L' or 'R'");
}

Word Word::from_string(std::string_view s, Pos lo) {
  std::vector<Letter> letters;
  letters.reserve(s.size());
  for (char c : s) letters.push_back(letter_from_char(c));
  return Word(lo, std::move(letters));
}

Letter Word::at(Pos p) const {
  if (!domain().contains(p)) throw std::domain_error("Word::at: position outside domain");
  return letters_[static_cast<std::size_t>(p - lo_)];
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

bool is_balanced(const Word& w) {
  std::int64_t depth = 0;
  for (Letter l : w.letters()) {
    depth += (l == Letter::L) ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

std::int64_t height(const Word& w, Pos i) {
  if (i != w.lo() - 1 && !w.domain().contains(i)) {
    throw std::domain_error("height: position outside domain");
  }
  std::int64_t h = 0;
  for (Pos p = w.lo(); p <= i; ++p) {
    h += (w.at(p) == Letter::L) ? 1 : -1;
  }
  return h;
}

PartialMatching word_to_matching(const Word& w) {
  PartialMatching m;
  m.dom_ = w.domain();
  m.link_.assign(static_cast<std::size_t>(w.size()), 0);
  std::vector<Pos> open;
  for (Pos p = w.lo(); p <= w.domain().hi; ++p) {
    std::size_t idx = static_cast<std::size_t>(p - w.lo());
    if (w.at(p) == Letter::L) {
      open.push_back(p);
      m.link_[idx] = PartialMatching::kSingletonL;  // provisional until matched
    } else if (!open.empty()) {
      Pos q = open.back();
      open.pop_back();
      m.link_[static_cast<std::size_t>(q - w.lo())] = p;
      m.link_[idx] = q;
    } else {
      m.link_[idx] = PartialMatching::kSingletonR;
    }
  }
  return m;
}

Word matching_to_word(const PartialMatching& m) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(m.size()));
  for (Pos p = m.domain().lo; p <= m.domain().hi; ++p) {
    if (auto q = m.partner_of(p)) {
      letters.push_back(p < *q ? Letter::L : Letter::R);
    } else {
      letters.push_back(*m.singleton_decoration(p));
    }
  }
  return Word(m.domain().lo, std::move(letters));
}

PartialMatching::PartialMatching(Interval domain, const std::vector<std::pair<Pos, Pos>>& pairs,
                                 const std::vector<std::pair<Pos, Letter>>& singletons) {
  dom_ = domain;
  link_.assign(static_cast<std::size_t>(domain.length()), 0);
  std::vector<bool> seen(link_.size(), false);
  auto idx_of = [&](Pos p) -> std::size_t {
    if (!dom_.contains(p)) throw std::domain_error("PartialMatching: position outside domain");
    return static_cast<std::size_t>(p - dom_.lo);
  };
  for (const auto& [a, b] : pairs) {
    std::size_t ia = idx_of(a);
    std::size_t ib = idx_of(b);
    if (a == b || seen[ia] || seen[ib]) {
      throw InvariantError("PartialMatching: pairs and singletons must partition the domain");
    }
    seen[ia] = seen[ib] = true;
    link_[ia] = b;
    link_[ib] = a;
  }
  for (const auto& [p, dec] : singletons) {
    std::size_t ip = idx_of(p);
    if (seen[ip]) {
      throw InvariantError("PartialMatching: pairs and singletons must partition the domain");
    }
    seen[ip] = true;
    link_[ip] = dec == Letter::L ? kSingletonL : kSingletonR;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw InvariantError("PartialMatching: uncovered positions");
  }
  // Non-crossing check via the word bijection: the matching is non-crossing
  // iff rebuilding it from its own word reproduces it.
  if (word_to_matching(matching_to_word(*this)).link_ != link_) {
    throw InvariantError("PartialMatching: crossing configuration");
  }
}

bool PartialMatching::is_complete() const {
  return std::none_of(link_.begin(), link_.end(),
                      [](Pos l) { return l == kSingletonL || l == kSingletonR; });
}

std::optional<Pos> PartialMatching::partner_of(Pos p) const {
  if (!dom_.contains(p)) throw std::domain_error("PartialMatching::partner_of: outside domain");
  Pos l = link_[static_cast<std::size_t>(p - dom_.lo)];
  if (l == kSingletonL || l == kSingletonR) return std::nullopt;
  return l;
}

std::optional<Letter> PartialMatching::singleton_decoration(Pos p) const {
  if (!dom_.contains(p)) {
    throw std::domain_error("PartialMatching::singleton_decoration: outside domain");
  }
  Pos l = link_[static_cast<std::size_t>(p - dom_.lo)];
  if (l == kSingletonL) return Letter::L;
  if (l == kSingletonR) return Letter::R;
  return std::nullopt;
}

std::vector<std::pair<Pos, Pos>> PartialMatching::pairs() const {
  std::vector<std::pair<Pos, Pos>> out;
  for (Pos p = dom_.lo; p <= dom_.hi; ++p) {
    Pos l = link_[static_cast<std::size_t>(p - dom_.lo)];
    if (l != kSingletonL && l != kSingletonR && p < l) out.emplace_back(p, l);
  }
  return out;
}

std::vector<std::pair<Pos, Letter>> PartialMatching::singletons() const {
  std::vector<std::pair<Pos, Letter>> out;
  for (Pos p = dom_.lo; p <= dom_.hi; ++p) {
    if (auto dec = singleton_decoration(p)) out.emplace_back(p, *dec);
  }
  return out;
}

PartialMatching PartialMatching::shifted(Pos delta) const {
  PartialMatching out;
  out.dom_ = Interval{dom_.lo + delta, dom_.hi + delta};
  out.link_.reserve(link_.size());
  for (Pos l : link_) {
    out.link_.push_back(l == kSingletonL || l == kSingletonR ? l : l + delta);
  }
  return out;
}

std::optional<Pos> partner(const Word& w, Pos i) {
  if (!w.domain().contains(i)) throw std::domain_error("partner: position outside domain");
  if (w.at(i) == Letter::L) {
    std::int64_t depth = 1;
    for (Pos j = i + 1; j <= w.domain().hi; ++j) {
      depth += (w.at(j) == Letter::L) ? 1 : -1;
      if (depth == 0) return j;
    }
  } else {
    std::int64_t depth = 1;
    for (Pos j = i - 1; j >= w.lo(); --j) {
      depth += (w.at(j) == Letter::R) ? 1 : -1;
      if (depth == 0) return j;
    }
  }
  return std::nullopt;
}

Word restrict(const Word& w, Interval sub) {
  if (!w.domain().contains(sub)) throw std::domain_error("restrict: sub not within domain");
  if (sub.empty()) return Word(sub.lo, {});
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(sub.length()));
  for (Pos p = sub.lo; p <= sub.hi; ++p) letters.push_back(w.at(p));
  return Word(sub.lo, std::move(letters));
}

PartialMatching restrict(const PartialMatching& m, Interval sub) {
  if (!m.domain().contains(sub)) throw std::domain_error("restrict: sub not within domain");
  std::vector<std::pair<Pos, Pos>> pairs;
  std::vector<std::pair<Pos, Letter>> singletons;
  for (Pos p = sub.lo; p <= sub.hi; ++p) {
    if (auto q = m.partner_of(p)) {
      if (sub.contains(*q)) {
        if (p < *q) pairs.emplace_back(p, *q);
      } else {
        singletons.emplace_back(p, *q > p ? Letter::L : Letter::R);
      }
    } else {
      singletons.emplace_back(p, *m.singleton_decoration(p));
    }
  }
  return PartialMatching(sub, pairs, singletons);
}

bool equivalent_up_to_shift(const MarkedWord& a, const MarkedWord& b) {
  return a.word.size() == b.word.size() && a.word.lo() - a.mark == b.word.lo() - b.mark &&
         a.word.letters() == b.word.letters();
}

Rational marked_word_distance(const MarkedWord& a, const MarkedWord& b) {
  if (!a.word.domain().contains(a.mark) || !b.word.domain().contains(b.mark)) {
    throw std::domain_error("marked_word_distance: mark outside domain");
  }
  if (a.word.at(a.mark) != b.word.at(b.mark)) return Rational(1);
  for (Pos k = 1;; ++k) {
    Interval wa = Interval::intersection(a.word.domain(), {a.mark - k, a.mark + k});
    Interval wb = Interval::intersection(b.word.domain(), {b.mark - k, b.mark + k});
    MarkedWord ra{restrict(a.word, wa), a.mark};
    MarkedWord rb{restrict(b.word, wb), b.mark};
    bool saturated = wa == a.word.domain() && wb == b.word.domain();
    if (!equivalent_up_to_shift(ra, rb)) return Rational(1, k);
    if (saturated) return Rational(0);
  }
}

}  // namespace noodle
