#include <benchmark/benchmark.h>

#include "noodle/sampling.hpp"
#include "noodle/systems.hpp"

using namespace noodle;

static void BM_Components(benchmark::State& state) {
  RandomSource rng(7);
  PairSystem s = sample_meandric_system(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(components(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Components)->Range(64, 16384)->Complexity();

static void BM_CcIdentity(benchmark::State& state) {
  RandomSource rng(8);
  PairSystem s = sample_meandric_system(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc_expectation_identity(s));
  }
}
BENCHMARK(BM_CcIdentity)->Range(64, 1024);
