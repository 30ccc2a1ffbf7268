#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "noodle/rng.hpp"
#include "noodle/systems.hpp"

namespace noodle {

inline constexpr int kHasseCap = 6;

/// A non-crossing partition of {1..n}: no a<b<c<d with a,c in one block
/// and b,d in another. Canonical form: blocks sorted ascending, ordered by
/// their minima.
class NCPartition {
 public:
  NCPartition(int n, std::vector<std::vector<int>> blocks);

  static NCPartition singletons(int n);  // 0_n
  static NCPartition one_block(int n);   // 1_n

  /// Text format: blocks separated by '|', elements by ',', e.g. "1,2,3|4".
  static NCPartition parse(const std::string& text, int n);
  std::string to_string() const;

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_index_of(int element) const;

  bool operator==(const NCPartition&) const = default;
  bool operator<(const NCPartition& o) const { return blocks_ < o.blocks_; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Refinement order: every block of a contained in a block of b.
bool leq(const NCPartition& a, const NCPartition& b);

std::vector<NCPartition> all_noncrossing_partitions(int n);

/// Graph distance in the Hasse diagram of NC(n), by breadth-first search.
/// Oracle-grade: capped at small n (Cat_6 = 132 vertices by default).
std::int64_t hasse_distance(const NCPartition& a, const NCPartition& b, int cap = kHasseCap);

/// The doubling construction: integer i owns points 2i-2 and 2i-1; a block
/// i_1 < ... < i_m contributes arcs {right(i_j), left(i_j+1)} plus the
/// closing arc {left(i_1), right(i_m)}. Upper matching from pi, lower from
/// rho; the map is a bijection onto meandric systems of size n.
PairSystem gnp_meandric_system(const NCPartition& pi, const NCPartition& rho);

/// Inverse of the doubling construction on one side.
NCPartition partition_from_matching(const PartialMatching& m);

/// n - cc(gnp_meandric_system(pi, rho)); equals the Hasse-graph distance.
std::int64_t distance_via_cc(const NCPartition& pi, const NCPartition& rho);

/// Uniform non-crossing partition via a uniform balanced word and the
/// inverse doubling map (no rejection).
NCPartition sample_nc_partition(std::int64_t n, RandomSource& rng);

struct TypicalDistanceResult {
  double mean_d_over_n = 0;
  double mean_d0_over_n = 0;
  std::int64_t n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Mean of d(pi, rho)/n over independent uniform pairs, and of
/// d(0_n, rho)/n, both computed through the meandric-system identity.
TypicalDistanceResult typical_distance_experiment(std::int64_t n, std::int64_t samples,
                                                  std::uint64_t seed);

}  // namespace noodle
