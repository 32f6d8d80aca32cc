// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "wehrl/deficit.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/levelsets.hpp"
#include "wehrl/logsob.hpp"

using namespace wehrl;

static void BM_HusimiEval(benchmark::State& state) {
  const HusimiEvaluator u(random_density_matrix(static_cast<int>(state.range(0)), 2, 1));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u(PhasePoint{x, 0.3}));
    x += 1e-6;
  }
}
BENCHMARK(BM_HusimiEval)->Arg(8)->Arg(32);

static void BM_HusimiMax(benchmark::State& state) {
  const auto rho = random_density_matrix(8, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(husimi_max(rho).T);
}
BENCHMARK(BM_HusimiMax)->Unit(benchmark::kMillisecond);

static void BM_WehrlEntropy(benchmark::State& state) {
  const auto rho = DensityMatrix::pure(random_pure_state(static_cast<int>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(wehrl_entropy(rho));
}
BENCHMARK(BM_WehrlEntropy)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_Profile(benchmark::State& state) {
  const auto rho = random_density_matrix(6, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_profile(rho).T);
}
BENCHMARK(BM_Profile)->Unit(benchmark::kMillisecond);

static void BM_DeficitD(benchmark::State& state) {
  const auto rho = random_density_matrix(6, 2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(deficit_D(rho).D);
}
BENCHMARK(BM_DeficitD)->Unit(benchmark::kMillisecond);

static void BM_LogSob(benchmark::State& state) {
  const auto F = random_fock_function(8, 11);
  for (auto _ : state) benchmark::DoNotOptimize(logsob_deficit(F).deficit);
}
BENCHMARK(BM_LogSob)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
