#include <benchmark/benchmark.h>

#include "noodle/rng.hpp"
#include "noodle/sampling.hpp"
#include "noodle/words.hpp"

using namespace noodle;

static void BM_WordToMatching(benchmark::State& state) {
  RandomSource rng(1);
  Word w = sample_balanced_word(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(word_to_matching(w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WordToMatching)->Range(64, 16384)->Complexity();

static void BM_PartnerSweep(benchmark::State& state) {
  RandomSource rng(2);
  Word w = sample_balanced_word(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partner(w, 0));
  }
}
BENCHMARK(BM_PartnerSweep)->Range(64, 16384);

static void BM_Restrict(benchmark::State& state) {
  RandomSource rng(3);
  Word w = sample_balanced_word(state.range(0), rng);
  auto m = word_to_matching(w);
  Interval sub{state.range(0) / 2, 3 * state.range(0) / 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(restrict(m, sub));
  }
}
BENCHMARK(BM_Restrict)->Range(64, 16384);
