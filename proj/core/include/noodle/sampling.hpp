#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "noodle/enumeration.hpp"
#include "noodle/noodle_oracle.hpp"
#include "noodle/numeric.hpp"
#include "noodle/rng.hpp"
#include "noodle/systems.hpp"

namespace noodle {

/// Uniform over the Cat_n balanced words of length 2n, by the cycle lemma:
/// shuffle n L's and n+1 R's, rotate to the unique dominated rotation and
/// drop the final R.
Word sample_balanced_word(std::int64_t n, RandomSource& rng);

/// Two independent uniform balanced words (upper drawn first).
PairSystem sample_meandric_system(std::int64_t n, RandomSource& rng);

enum class ExplorationStatus : std::uint8_t { Closed, Censored };

struct ExplorationResult {
  ExplorationStatus status = ExplorationStatus::Censored;
  std::vector<Pos> points;     // component points found, ascending
  std::int64_t size = 0;       // |points|
  std::optional<Meander> shape;
  bool leftmost_is_zero = false;  // tentative when censored
  std::optional<std::int64_t> escape_index;  // K, when the exploration finds E_K
  std::optional<PartialShape> partial_shape;
  std::int64_t draws_used = 0;
};

/// Breadth-first closure of `start` under upper/lower partner moves, with
/// letters drawn lazily. Partner search is a balance-counting outward scan;
/// it terminates a.s. but the budget (fresh letter draws) bounds it, and
/// exhaustion reports a censored result rather than an error.
ExplorationResult explore_component(NoodleOracle& oracle, Pos start, std::int64_t budget);

/// Tests the escape events E_k for k = 0, 1, ... and stops at the first
/// one that holds, returning K and (when K >= 1) the partial shape of the
/// component of 0 in the window [0, K]. If the component closes into a
/// loop first, 0 is the leftmost point of its component and no E_k ever
/// holds. Censored when the draw budget runs out undecided.
ExplorationResult explore_partial_shape(NoodleOracle& oracle, std::int64_t budget);

struct KappaEstimate {
  double point = 0;
  double low = 0;
  double high = 0;
  Rational low_exact;
  Rational high_exact;
  std::int64_t samples = 0;
  std::int64_t censored = 0;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo average of 2/|C_0| over independent noodles. Censored runs
/// contribute 0 to the low edge and 2/(points found) to the high edge,
/// giving a deterministic bracket around the infinite-budget value of the
/// same sample set. Sample i uses the derived seed mix(seed, i), so any
/// thread count yields the identical result.
KappaEstimate estimate_kappa_noodle(std::int64_t samples, std::int64_t budget, std::uint64_t seed,
                                    int threads = 0);

struct FiniteKappaEstimate {
  double mean = 0;
  double std_error = 0;
  Rational mean_exact;
  std::int64_t n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Average of cc(M)/n over uniform meandric systems of size n.
FiniteKappaEstimate estimate_kappa_finite(std::int64_t n, std::int64_t samples, std::uint64_t seed,
                                          int threads = 0);

struct LocalProfileResult {
  double tv_distance = 0;
  std::int64_t n = 0;
  int radius = 0;
  std::int64_t marks = 0;
  std::uint64_t seed = 0;
};

/// Quenched local-profile diagnostic: samples one meandric system of size
/// n, then the empirical law of the radius-k letter patterns around
/// uniform marks (kept away from the boundary) is compared in total
/// variation against the uniform law on 2(2k+1) fair letters.
LocalProfileResult local_profile(std::int64_t n, int radius, std::int64_t marks,
                                 std::uint64_t seed);

}  // namespace noodle
