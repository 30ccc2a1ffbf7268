#include "noodle/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace noodle {

Word sample_balanced_word(std::int64_t n, RandomSource& rng) {
  if (n < 0) throw std::domain_error("sample_balanced_word: n < 0");
  if (n == 0) return Word(0, {});
  // n L's and n+1 R's; exactly one rotation of the necklace stays
  // nonnegative until the final step, and dropping that last R leaves a
  // uniform balanced word.
  std::vector<Letter> arr(static_cast<std::size_t>(2 * n + 1), Letter::R);
  std::fill(arr.begin(), arr.begin() + n, Letter::L);
  for (std::size_t i = arr.size() - 1; i > 0; --i) {
    std::size_t j = rng.next_below(i + 1);
    std::swap(arr[i], arr[j]);
  }
  // The good rotation starts right after the first position attaining the
  // minimum prefix sum.
  std::int64_t sum = 0, min_sum = 0;
  std::size_t min_at = arr.size();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    sum += arr[i] == Letter::L ? 1 : -1;
    if (sum < min_sum) {
      min_sum = sum;
      min_at = i;
    }
  }
  std::size_t start = (min_at + 1) % arr.size();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * n); ++i) {
    letters.push_back(arr[(start + i) % arr.size()]);
  }
  return Word(0, std::move(letters));
}

PairSystem sample_meandric_system(std::int64_t n, RandomSource& rng) {
  Word upper = sample_balanced_word(n, rng);
  Word lower = sample_balanced_word(n, rng);
  return PairSystem(std::move(upper), std::move(lower));
}

namespace {

// Partner lookup with memoization. A scan records every pair it closes
// along the way, so overlapping nested scans stay amortized linear in the
// explored window.
class PartnerFinder {
 public:
  PartnerFinder(NoodleOracle& oracle, std::int64_t draw_limit)
      : oracle_(oracle), limit_(draw_limit) {}

  // nullopt = draw budget exhausted mid-scan
  std::optional<Pos> find(NoodleSide side, Pos i) {
    auto& memo = memo_[static_cast<std::size_t>(side)];
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    std::vector<Pos> open;
    if (oracle_.letter(side, i) == Letter::L) {
      for (Pos j = i + 1;; ++j) {
        if (oracle_.draws() > limit_) return std::nullopt;
        if (oracle_.letter(side, j) == Letter::L) {
          open.push_back(j);
        } else if (!open.empty()) {
          record(memo, open.back(), j);
          open.pop_back();
        } else {
          record(memo, i, j);
          return j;
        }
      }
    }
    for (Pos j = i - 1;; --j) {
      if (oracle_.draws() > limit_) return std::nullopt;
      if (oracle_.letter(side, j) == Letter::R) {
        open.push_back(j);
      } else if (!open.empty()) {
        record(memo, j, open.back());
        open.pop_back();
      } else {
        record(memo, j, i);
        return j;
      }
    }
  }

 private:
  static void record(std::map<Pos, Pos>& memo, Pos a, Pos b) {
    memo[a] = b;
    memo[b] = a;
  }

  NoodleOracle& oracle_;
  std::int64_t limit_;
  std::map<Pos, Pos> memo_[2];
};

}  // namespace

ExplorationResult explore_component(NoodleOracle& oracle, Pos start, std::int64_t budget) {
  if (budget <= 0) throw std::domain_error("explore_component: budget must be positive");
  const std::int64_t draws_before = oracle.draws();
  const std::int64_t limit = draws_before + budget;

  ExplorationResult result;
  std::vector<Pos> queue{start};
  std::map<Pos, bool> seen{{start, true}};
  PartnerFinder partners(oracle, limit);
  bool censored = false;
  for (std::size_t idx = 0; idx < queue.size() && !censored; ++idx) {
    Pos p = queue[idx];
    for (NoodleSide side : {NoodleSide::Upper, NoodleSide::Lower}) {
      std::optional<Pos> q = partners.find(side, p);
      if (!q) {
        censored = true;
        break;
      }
      if (!seen.count(*q)) {
        seen[*q] = true;
        queue.push_back(*q);
      }
    }
    if (static_cast<std::int64_t>(queue.size()) > budget) censored = true;
  }

  result.points.reserve(seen.size());
  for (const auto& [p, _] : seen) result.points.push_back(p);
  result.size = static_cast<std::int64_t>(result.points.size());
  result.draws_used = oracle.draws() - draws_before;
  result.leftmost_is_zero = result.points.front() == start;
  if (censored) {
    result.status = ExplorationStatus::Censored;
    return result;
  }
  result.status = ExplorationStatus::Closed;
  result.shape = Meander(extract_pair_system(
      result.points, [&](Pos p) { return oracle.letter(NoodleSide::Upper, p); },
      [&](Pos p) { return oracle.letter(NoodleSide::Lower, p); }));
  return result;
}

namespace {

// Union-find over window positions, tracking per component whether some
// arc escapes to the left of 0 and how many L-slots are still waiting for
// a partner to the right.
class WindowComponents {
 public:
  void add_point() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    escapes_.push_back(false);
    pending_.push_back(0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    escapes_[a] = escapes_[a] || escapes_[b];
    pending_[a] += pending_[b];
  }

  void mark_escape(std::size_t x) { escapes_[find(x)] = true; }
  void add_pending(std::size_t x, std::int64_t d) { pending_[find(x)] += d; }
  bool escapes(std::size_t x) { return escapes_[find(x)]; }
  std::int64_t pending(std::size_t x) { return pending_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<char> escapes_;
  std::vector<std::int64_t> pending_;
};

}  // namespace

ExplorationResult explore_partial_shape(NoodleOracle& oracle, std::int64_t budget) {
  if (budget <= 0) throw std::domain_error("explore_partial_shape: budget must be positive");
  const std::int64_t draws_before = oracle.draws();
  const std::int64_t limit = draws_before + budget;

  ExplorationResult result;
  WindowComponents comp;
  std::vector<Pos> open_stack[2];  // unmatched L positions per side

  auto finish_points = [&](Pos last) {
    std::size_t root0 = comp.find(0);
    for (Pos p = 0; p <= last; ++p) {
      if (comp.find(static_cast<std::size_t>(p)) == root0) result.points.push_back(p);
    }
    result.size = static_cast<std::int64_t>(result.points.size());
    result.draws_used = oracle.draws() - draws_before;
  };

  for (Pos k = 0;; ++k) {
    if (oracle.draws() + 2 > limit) {
      // undecided: no escape found yet, so tentatively the leftmost point
      result.status = ExplorationStatus::Censored;
      result.leftmost_is_zero = true;
      result.draws_used = oracle.draws() - draws_before;
      return result;
    }
    comp.add_point();
    auto uk = static_cast<std::size_t>(k);
    for (NoodleSide side : {NoodleSide::Upper, NoodleSide::Lower}) {
      auto s = static_cast<std::size_t>(side);
      if (oracle.letter(side, k) == Letter::L) {
        open_stack[s].push_back(k);
        comp.add_pending(uk, 1);
      } else if (!open_stack[s].empty()) {
        Pos p = open_stack[s].back();
        open_stack[s].pop_back();
        comp.add_pending(static_cast<std::size_t>(p), -1);
        comp.merge(static_cast<std::size_t>(p), uk);
      } else {
        // an R with no partner in [0, k] closes from the left of 0
        comp.mark_escape(uk);
      }
    }
    if (comp.escapes(0)) {
      result.status = ExplorationStatus::Closed;
      result.leftmost_is_zero = false;
      result.escape_index = k;
      finish_points(k);
      if (k >= 1) {
        result.partial_shape = PartialShape(extract_partial_system(
            result.points, [&](Pos p) { return oracle.letter(NoodleSide::Upper, p); },
            [&](Pos p) { return oracle.letter(NoodleSide::Lower, p); }));
      }
      return result;
    }
    if (comp.pending(0) == 0) {
      // every slot of 0's component is paired inside the window: a loop,
      // and 0 is its leftmost point
      result.status = ExplorationStatus::Closed;
      result.leftmost_is_zero = true;
      finish_points(k);
      result.shape = Meander(extract_pair_system(
          result.points, [&](Pos p) { return oracle.letter(NoodleSide::Upper, p); },
          [&](Pos p) { return oracle.letter(NoodleSide::Lower, p); }));
      return result;
    }
  }
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct NoodleHistograms {
  std::vector<std::int64_t> closed;    // index: component size
  std::vector<std::int64_t> censored;  // index: points found at censoring

  explicit NoodleHistograms(std::size_t cells) : closed(cells, 0), censored(cells, 0) {}

  void merge(const NoodleHistograms& o) {
    for (std::size_t i = 0; i < closed.size(); ++i) {
      closed[i] += o.closed[i];
      censored[i] += o.censored[i];
    }
  }
};

}  // namespace

KappaEstimate estimate_kappa_noodle(std::int64_t samples, std::int64_t budget, std::uint64_t seed,
                                    int threads) {
  if (samples < 1) throw std::domain_error("estimate_kappa_noodle: samples < 1");
  if (budget < 1) throw std::domain_error("estimate_kappa_noodle: budget < 1");
  const std::size_t cells = static_cast<std::size_t>(budget) + 2;
  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    NoodleHistograms h(cells);
    for (std::int64_t i = begin; i < end; ++i) {
      NoodleOracle oracle(RandomSource::mix(seed, static_cast<std::uint64_t>(i)));
      ExplorationResult r = explore_component(oracle, 0, budget);
      auto idx = static_cast<std::size_t>(std::min<std::int64_t>(r.size, budget + 1));
      if (r.status == ExplorationStatus::Closed) {
        ++h.closed[idx];
      } else {
        ++h.censored[idx];
      }
    }
    return h;
  };

  int t = std::min<std::int64_t>(resolve_threads(threads), samples);
  NoodleHistograms total(cells);
  if (t <= 1) {
    total = run_range(0, samples);
  } else {
    std::vector<std::future<NoodleHistograms>> futures;
    std::int64_t chunk = (samples + t - 1) / t;
    for (int w = 0; w < t; ++w) {
      std::int64_t begin = w * chunk;
      std::int64_t end = std::min(samples, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, run_range, begin, end));
    }
    for (auto& f : futures) total.merge(f.get());
  }

  KappaEstimate est;
  est.samples = samples;
  est.budget = budget;
  est.seed = seed;
  Rational closed_sum(0);
  Rational censored_sum(0);
  for (std::size_t s = 1; s < cells; ++s) {
    if (total.closed[s] > 0) {
      closed_sum += Rational(2 * total.closed[s], static_cast<std::int64_t>(s));
    }
    if (total.censored[s] > 0) {
      est.censored += total.censored[s];
      censored_sum += Rational(2 * total.censored[s], static_cast<std::int64_t>(s));
    }
  }
  Rational inv_samples(1, samples);
  est.low_exact = closed_sum * inv_samples;
  est.high_exact = (closed_sum + censored_sum) * inv_samples;
  est.low = est.low_exact.to_double();
  est.high = est.high_exact.to_double();
  est.point = est.low;
  return est;
}

FiniteKappaEstimate estimate_kappa_finite(std::int64_t n, std::int64_t samples, std::uint64_t seed,
                                          int threads) {
  if (n < 1) throw std::domain_error("estimate_kappa_finite: n < 1");
  if (samples < 1) throw std::domain_error("estimate_kappa_finite: samples < 1");
  struct Sums {
    std::int64_t cc = 0;
    double sq = 0;  // sum of (cc/n)^2
  };
  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    Sums s;
    for (std::int64_t i = begin; i < end; ++i) {
      RandomSource rng(RandomSource::mix(seed, static_cast<std::uint64_t>(i)));
      PairSystem m = sample_meandric_system(n, rng);
      std::int64_t cc = components(m).count;
      s.cc += cc;
      double x = static_cast<double>(cc) / static_cast<double>(n);
      s.sq += x * x;
    }
    return s;
  };

  int t = std::min<std::int64_t>(resolve_threads(threads), samples);
  Sums total;
  if (t <= 1) {
    total = run_range(0, samples);
  } else {
    std::vector<std::future<Sums>> futures;
    std::int64_t chunk = (samples + t - 1) / t;
    for (int w = 0; w < t; ++w) {
      std::int64_t begin = w * chunk;
      std::int64_t end = std::min(samples, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, run_range, begin, end));
    }
    for (auto& f : futures) {
      Sums s = f.get();
      total.cc += s.cc;
      total.sq += s.sq;
    }
  }

  FiniteKappaEstimate est;
  est.n = n;
  est.samples = samples;
  est.seed = seed;
  est.mean_exact = Rational(total.cc, samples * n);
  est.mean = est.mean_exact.to_double();
  if (samples > 1) {
    double var = (total.sq - static_cast<double>(samples) * est.mean * est.mean) /
                 static_cast<double>(samples - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return est;
}

LocalProfileResult local_profile(std::int64_t n, int radius, std::int64_t marks,
                                 std::uint64_t seed) {
  if (radius < 0) throw std::domain_error("local_profile: radius < 0");
  if (n <= 2 * radius + 1) throw std::domain_error("local_profile: n too small for radius");
  if (marks < 1) throw std::domain_error("local_profile: marks < 1");
  const int window = 2 * radius + 1;
  if (2 * window > 24) throw std::domain_error("local_profile: radius too large");

  RandomSource rng(seed);
  PairSystem system = sample_meandric_system(n, rng);
  const Pos len = 2 * n;

  const std::size_t cells = std::size_t{1} << (2 * window);
  std::vector<std::int64_t> counts(cells, 0);
  for (std::int64_t i = 0; i < marks; ++i) {
    Pos r = radius + static_cast<Pos>(rng.next_below(static_cast<std::uint64_t>(len - 2 * radius)));
    std::size_t pattern = 0;
    for (Pos d = -radius; d <= radius; ++d) {
      pattern = (pattern << 1) | (system.upper().at(r + d) == Letter::R ? 1 : 0);
    }
    for (Pos d = -radius; d <= radius; ++d) {
      pattern = (pattern << 1) | (system.lower().at(r + d) == Letter::R ? 1 : 0);
    }
    ++counts[pattern];
  }

  double tv = 0;
  const double uniform = 1.0 / static_cast<double>(cells);
  for (std::int64_t c : counts) {
    tv += std::abs(static_cast<double>(c) / static_cast<double>(marks) - uniform);
  }

  LocalProfileResult result;
  result.tv_distance = tv / 2;
  result.n = n;
  result.radius = radius;
  result.marks = marks;
  result.seed = seed;
  return result;
}

}  // namespace noodle
