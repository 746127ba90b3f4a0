#include <benchmark/benchmark.h>

#include "dioph/family.hpp"

static void BM_EnumerateFamily(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::enumerate_family(l));
}
BENCHMARK(BM_EnumerateFamily)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Quantize(benchmark::State& state) {
  const auto family = dioph::enumerate_family(4);
  for (auto _ : state) {
    for (const auto& p : family) benchmark::DoNotOptimize(dioph::quantize(p, 4, 2));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.size()));
}
BENCHMARK(BM_Quantize)->Unit(benchmark::kMillisecond);
