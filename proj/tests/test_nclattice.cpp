#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "noodle/errors.hpp"
#include "noodle/nclattice.hpp"
#include "noodle/serialize.hpp"

using namespace noodle;

TEST_CASE("partition construction, parsing, validation") {
  NCPartition p = NCPartition::parse("1,2,3|4", 4);
  CHECK(p.block_count() == 2);
  CHECK(p.to_string() == "1,2,3|4");
  CHECK(NCPartition::parse("4|3,1,2", 4) == p);

  CHECK(NCPartition::singletons(3).block_count() == 3);
  CHECK(NCPartition::one_block(3).block_count() == 1);
  CHECK(NCPartition(3, {{1, 3}, {2}}).block_count() == 2);  // nested, fine

  CHECK_THROWS_AS(NCPartition(4, {{1, 3}, {2, 4}}), InvariantError);  // crossing
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}}), InvariantError);          // not covering
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}, {2, 3}}), InvariantError);  // overlap
}

TEST_CASE("refinement order") {
  CHECK(leq(NCPartition::parse("1,2|3", 3), NCPartition::parse("1,2,3", 3)));
  CHECK_FALSE(leq(NCPartition::parse("1,2|3", 3), NCPartition::parse("1,3|2", 3)));
  for (int n = 1; n <= 5; ++n) {
    for (const NCPartition& pi : all_noncrossing_partitions(n)) {
      CHECK(leq(NCPartition::singletons(n), pi));
      CHECK(leq(pi, NCPartition::one_block(n)));
    }
  }
  CHECK_THROWS_AS(leq(NCPartition::singletons(2), NCPartition::singletons(3)), std::domain_error);
}

TEST_CASE("NC(n) has Catalan size") {
  const std::int64_t cat[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    auto all = all_noncrossing_partitions(n);
    CHECK(static_cast<std::int64_t>(all.size()) == cat[n]);
    CHECK(std::set<NCPartition>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("hasse distance oracle basics") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(hasse_distance(NCPartition::singletons(n), NCPartition::one_block(n)) == n - 1);
    for (const NCPartition& rho : all_noncrossing_partitions(n)) {
      CHECK(hasse_distance(rho, rho) == 0);
      // rank identity: covers change the block count by exactly one
      CHECK(hasse_distance(NCPartition::singletons(n), rho) == n - rho.block_count());
    }
  }
  CHECK_THROWS_AS(hasse_distance(NCPartition::singletons(7), NCPartition::one_block(7)),
                  ResourceError);
}

TEST_CASE("doubling construction and its inverse") {
  // pi = rho = 0_n gives n disjoint loops
  for (int n = 1; n <= 5; ++n) {
    NCPartition zero = NCPartition::singletons(n);
    PairSystem loops = gnp_meandric_system(zero, zero);
    CHECK(components(loops).count == n);
  }
  // roundtrip through one side of the bijection
  for (int n = 1; n <= 5; ++n) {
    for (const NCPartition& pi : all_noncrossing_partitions(n)) {
      PairSystem s = gnp_meandric_system(pi, pi);
      CHECK(partition_from_matching(word_to_matching(s.upper())) == pi);
    }
  }
  // bijectivity: images of all pairs are exactly all systems (n <= 4)
  for (int n = 1; n <= 4; ++n) {
    auto all = all_noncrossing_partitions(n);
    std::set<std::string> images;
    for (const NCPartition& pi : all) {
      for (const NCPartition& rho : all) {
        images.insert(pair_system_to_json(gnp_meandric_system(pi, rho)));
      }
    }
    CHECK(images.size() == all.size() * all.size());
  }
  CHECK_THROWS_AS(gnp_meandric_system(NCPartition::singletons(2), NCPartition::singletons(3)),
                  std::domain_error);
}

TEST_CASE("distance identity d = n - cc on every pair up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    auto all = all_noncrossing_partitions(n);
    for (const NCPartition& pi : all) {
      for (const NCPartition& rho : all) {
        CHECK(distance_via_cc(pi, rho) == hasse_distance(pi, rho));
      }
    }
  }
}

TEST_CASE("figure-style pair on four elements") {
  // the merge of {1,3} and {2} inside rho yields pi, so they are one cover
  // apart; the meandric system accordingly has three components
  NCPartition pi = NCPartition::parse("1,2,3|4", 4);
  NCPartition rho = NCPartition::parse("1,3|2|4", 4);
  CHECK(hasse_distance(pi, rho) == 1);
  CHECK(components(gnp_meandric_system(pi, rho)).count == 3);
  CHECK(distance_via_cc(pi, rho) == 1);

  // a pair that does realize the maximal distance 3
  CHECK(distance_via_cc(NCPartition::singletons(4), NCPartition::one_block(4)) == 3);
}

TEST_CASE("metric properties inherited through the identity (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    auto all = all_noncrossing_partitions(n);
    for (const NCPartition& a : all) {
      for (const NCPartition& b : all) {
        CHECK(distance_via_cc(a, b) == distance_via_cc(b, a));
        CHECK((distance_via_cc(a, b) == 0) == (a == b));
        for (const NCPartition& c : all) {
          CHECK(distance_via_cc(a, c) <= distance_via_cc(a, b) + distance_via_cc(b, c));
        }
      }
    }
  }
}

TEST_CASE("self-duality: distances to 0_n and 1_n have the same profile") {
  for (int n = 2; n <= 5; ++n) {
    std::multiset<std::int64_t> to_zero, to_one;
    for (const NCPartition& rho : all_noncrossing_partitions(n)) {
      to_zero.insert(distance_via_cc(NCPartition::singletons(n), rho));
      to_one.insert(distance_via_cc(NCPartition::one_block(n), rho));
    }
    CHECK(to_zero == to_one);
  }
}

TEST_CASE("uniform partition sampling") {
  RandomSource rng(8);
  CHECK(sample_nc_partition(1, rng) == NCPartition::one_block(1));
  std::map<std::string, std::int64_t> counts;
  const std::int64_t draws = 50000;
  for (std::int64_t i = 0; i < draws; ++i) {
    ++counts[sample_nc_partition(3, rng).to_string()];
  }
  REQUIRE(counts.size() == 5);
  for (const auto& [key, count] : counts) {
    CHECK(std::abs(static_cast<double>(count) / draws - 0.2) < 0.01);
  }
}

TEST_CASE("typical distance experiment") {
  auto trivial = typical_distance_experiment(1, 100, 4);
  CHECK(trivial.mean_d_over_n == 0.0);

  auto small = typical_distance_experiment(200, 400, 4);
  CHECK(small.mean_d_over_n > 0.5);
  CHECK(small.mean_d_over_n < 0.95);
  CHECK(small.mean_d0_over_n > 0.3);
  CHECK(small.mean_d0_over_n < 0.7);
}
