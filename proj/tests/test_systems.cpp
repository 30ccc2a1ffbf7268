#include <doctest.h>

#include "noodle/enumeration.hpp"
#include "noodle/errors.hpp"
#include "noodle/rng.hpp"
#include "noodle/systems.hpp"

using namespace noodle;

namespace {

PairSystem system_of(const std::string& upper, const std::string& lower) {
  return PairSystem(Word::from_string(upper), Word::from_string(lower));
}

}  // namespace

TEST_CASE("components: spec pins") {
  // the size-4 meander (2 points up-down... upper nests, lower chains)
  auto meander4 = system_of("LLRR", "LRLR");
  auto stats = components(meander4);
  CHECK(stats.count == 1);
  CHECK(stats.sizes == std::vector<std::int64_t>{4});

  auto twin1 = system_of("LRLR", "LRLR");
  CHECK(components(twin1).count == 2);
  CHECK(components(twin1).sizes == std::vector<std::int64_t>{2, 2});

  auto twin2 = system_of("LLRR", "LLRR");
  CHECK(components(twin2).count == 2);
  CHECK(components(twin2).sizes == std::vector<std::int64_t>{2, 2});

  // canonical component ids are minima
  CHECK(components(twin1).component_id(3) == 2);
  CHECK(components(twin1).component_id(1) == 0);
}

TEST_CASE("cc expectation identity") {
  auto [lhs1, rhs1] = cc_expectation_identity(system_of("LRLR", "LRLR"));
  CHECK(lhs1 == Rational(1));
  CHECK(rhs1 == Rational(1));

  auto [lhs2, rhs2] = cc_expectation_identity(system_of("LLRR", "LRLR"));
  CHECK(lhs2 == Rational(1, 2));
  CHECK(rhs2 == Rational(1, 2));

  // exhaustive: every system with n <= 4 satisfies lhs == rhs exactly
  for (int n = 1; n <= 4; ++n) {
    auto words = balanced_words(n);
    for (const Word& up : words) {
      for (const Word& low : words) {
        auto [lhs, rhs] = cc_expectation_identity(PairSystem(up, low));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("component structure invariants on exhaustive small systems") {
  for (int n = 1; n <= 5; ++n) {
    auto words = balanced_words(n);
    std::int64_t total = 0;
    for (const Word& up : words) {
      for (const Word& low : words) {
        ++total;
        PairSystem s(up, low);
        auto stats = components(s);
        // swap-invariance
        CHECK(components(PairSystem(low, up)).sizes == stats.sizes);
        // complete systems split into even-size components (alternating cycles)
        for (std::int64_t size : stats.sizes) CHECK(size % 2 == 0);
      }
    }
    CHECK(total == (catalan(n) * catalan(n)).convert_to<std::int64_t>());
  }
}

TEST_CASE("marked system distance") {
  auto a = PartialSystem::from_words(Word::from_string("LLRR"), Word::from_string("LRLR"));
  MarkedSystem ma{a, 0};
  CHECK(marked_system_distance(ma, ma) == Rational(0));

  // differ at the mark on one side
  auto b = PartialSystem::from_words(Word::from_string("RLRL"), Word::from_string("LRLR"));
  CHECK(marked_system_distance(ma, MarkedSystem{b, 0}) == Rational(1));

  // mirror pair of the 4-point meander marked at 0: letters at the mark
  // agree on both sides but the radius-1 windows differ, so d = 1
  auto mirror = PartialSystem::from_words(Word::from_string("LRLR"), Word::from_string("LLRR"));
  CHECK(marked_system_distance(ma, MarkedSystem{mirror, 0}) == Rational(1));

  // the distance always equals the max of the two side distances
  RandomSource rng(19);
  auto random_partial = [&](int len, Pos lo) {
    std::vector<Letter> u, l;
    for (int i = 0; i < len; ++i) {
      u.push_back(rng.next_bool() ? Letter::R : Letter::L);
      l.push_back(rng.next_bool() ? Letter::R : Letter::L);
    }
    return PartialSystem::from_words(Word(lo, u), Word(lo, l));
  };
  for (int rep = 0; rep < 200; ++rep) {
    PartialSystem s1 = random_partial(10, -5);
    PartialSystem s2 = random_partial(13, 1);
    MarkedSystem m1{s1, -5 + static_cast<Pos>(rng.next_below(10))};
    MarkedSystem m2{s2, 1 + static_cast<Pos>(rng.next_below(13))};
    Rational via_sides =
        std::max(marked_word_distance({s1.upper_word(), m1.mark}, {s2.upper_word(), m2.mark}),
                 marked_word_distance({s1.lower_word(), m1.mark}, {s2.lower_word(), m2.mark}));
    CHECK(marked_system_distance(m1, m2) == via_sides);
  }
}

TEST_CASE("extract shape by relabeling") {
  // points {3,4,9,10}: upper letters L,R,L,R; lower L,L,R,R in order
  std::vector<Pos> points{3, 4, 9, 10};
  auto upper = [](Pos p) {
    return (p == 3 || p == 9) ? Letter::L : Letter::R;
  };
  auto lower = [](Pos p) { return (p == 3 || p == 4) ? Letter::L : Letter::R; };
  PairSystem shape = extract_pair_system(points, upper, lower);
  CHECK(shape.upper().to_string() == "LRLR");
  CHECK(shape.lower().to_string() == "LLRR");

  // single pair component {5,6}
  PairSystem tiny = extract_pair_system(
      {5, 6}, [](Pos p) { return p == 5 ? Letter::L : Letter::R; },
      [](Pos p) { return p == 5 ? Letter::L : Letter::R; });
  CHECK(tiny.n() == 1);
  CHECK(components(tiny).count == 1);

  CHECK_THROWS_AS(extract_pair_system({}, nullptr, nullptr), std::domain_error);
}

TEST_CASE("partial system restriction keeps sides aligned") {
  auto s = PartialSystem::from_words(Word::from_string("LLRRLR", -2), Word::from_string("RLLRRL", -2));
  auto r = restrict(s, Interval{-1, 2});
  CHECK(r.domain() == Interval{-1, 2});
  CHECK(r.upper_word() == restrict(s.upper_word(), Interval{-1, 2}));
  CHECK(r.lower_word() == restrict(s.lower_word(), Interval{-1, 2}));
}
