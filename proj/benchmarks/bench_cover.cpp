#include <benchmark/benchmark.h>

#include "dioph/annulus.hpp"
#include "dioph/covering.hpp"

static void BM_ClassifyDefaults(benchmark::State& state) {
  const auto constants = dioph::CoveringConstants::defaults();
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::classify_exceptional(l, 1, constants));
}
BENCHMARK(BM_ClassifyDefaults)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RegionSup(benchmark::State& state) {
  const auto dec = dioph::decompose_annulus(0.5, 3, 1);
  const dioph::IntPoly p{1, -2, 0, 1, 1};
  for (auto _ : state) {
    for (const auto& r : dec.regions) benchmark::DoNotOptimize(dioph::region_sup_estimate(p, r, 16));
  }
}
BENCHMARK(BM_RegionSup)->Unit(benchmark::kMicrosecond);
