#include <benchmark/benchmark.h>

#include "noodle/faces.hpp"
#include "noodle/kappa.hpp"

using namespace noodle;

static void BM_FaceProductSum(benchmark::State& state) {
  auto meanders = enumerate_meanders(4);
  auto d = faces(meanders[state.range(1) % meanders.size()]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(face_product_sum(d, state.range(0)));
  }
}
BENCHMARK(BM_FaceProductSum)->Args({30, 0})->Args({60, 0})->Args({120, 0})->Args({60, 11});

static void BM_KappaLowerK3(benchmark::State& state) {
  DirectEnumerationSource source;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa_lower({3, static_cast<int>(state.range(0))}, source, 1));
  }
}
BENCHMARK(BM_KappaLowerK3)->Arg(30)->Arg(60);

static void BM_ProbShapeUpperTerm(benchmark::State& state) {
  auto shapes = enumerate_partial_shapes(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prob_shape_upper_term(shapes[7], state.range(0)));
  }
}
BENCHMARK(BM_ProbShapeUpperTerm)->Arg(30)->Arg(60)->Arg(120);
