#include <benchmark/benchmark.h>

#include "dioph/ball.hpp"

static void BM_EnumerateBall(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::enumerate_ball(l));
}
BENCHMARK(BM_EnumerateBall)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_GapProfile(benchmark::State& state) {
  const auto ball = dioph::enumerate_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dioph::gap_profile(ball, dioph::Complex(1.7, 0.3)));
  }
}
BENCHMARK(BM_GapProfile)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_AbelianGap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dioph::abelian_gap(0.7071067811865476, state.range(0)));
  }
}
BENCHMARK(BM_AbelianGap)->Arg(1000)->Arg(1000000);
