// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "scramsim/harness.hpp"

namespace scramsim {
namespace {

void BM_RunScenarioRamp(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.device.v_os = 0.007;
  cfg.verifier.v_th_detect = 0.12;
  cfg.attack = {AttackKind::kRamp, 0.0, 1.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunScenario(cfg));
  }
}
BENCHMARK(BM_RunScenarioRamp)->Unit(benchmark::kMillisecond);

void BM_Calibration(benchmark::State& state) {
  ScenarioConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunCalibration(cfg));
  }
}
BENCHMARK(BM_Calibration)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.attack = {AttackKind::kRamp, 0.0, 1.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunMonteCarlo(cfg, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace scramsim
