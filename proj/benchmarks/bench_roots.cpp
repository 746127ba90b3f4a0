#include <benchmark/benchmark.h>

#include "dioph/family.hpp"
#include "dioph/roots.hpp"

static void BM_FindRootsFamily(benchmark::State& state) {
  const auto family = dioph::enumerate_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& p : family) {
      if (p.degree() >= 1) benchmark::DoNotOptimize(dioph::find_roots(p));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.size()));
}
BENCHMARK(BM_FindRootsFamily)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FindRootsCluster(benchmark::State& state) {
  // (x - 1)^3 (x + 1)^2
  const dioph::IntPoly p{1, -1, -2, 2, 1, -1};
  for (auto _ : state) benchmark::DoNotOptimize(dioph::find_roots(p));
}
BENCHMARK(BM_FindRootsCluster);
