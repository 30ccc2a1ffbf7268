#include <benchmark/benchmark.h>

#include "noodle/sampling.hpp"

using namespace noodle;

static void BM_SampleBalancedWord(benchmark::State& state) {
  RandomSource rng(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_balanced_word(state.range(0), rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleBalancedWord)->Range(64, 65536)->Complexity();

static void BM_ExploreComponent(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    NoodleOracle oracle(seed++);
    benchmark::DoNotOptimize(explore_component(oracle, 0, state.range(0)));
  }
}
BENCHMARK(BM_ExploreComponent)->Range(100, 10000);

static void BM_ExplorePartialShape(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    NoodleOracle oracle(seed++);
    benchmark::DoNotOptimize(explore_partial_shape(oracle, state.range(0)));
  }
}
BENCHMARK(BM_ExplorePartialShape)->Range(100, 10000);
