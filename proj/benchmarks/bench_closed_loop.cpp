/******************************************************************************
 * Copyright 2026 The mrac-lab Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#include <benchmark/benchmark.h>

#include "mrac/harness.hpp"
#include "mrac/poly.hpp"
#include "mrac/trace_io.hpp"

namespace {

void BM_ReproduceExample(benchmark::State& state) {
  const mrac::ExperimentConfig cfg = mrac::example_config();
  for (auto _ : state) {
    auto run = mrac::run_closed_loop(cfg);
    benchmark::DoNotOptimize(run.trace.rows.back().y);
  }
  state.SetItemsProcessed(state.iterations() * (cfg.steps + 1));
}
BENCHMARK(BM_ReproduceExample)->Unit(benchmark::kMillisecond);

void BM_ClosedLoopHorizon(benchmark::State& state) {
  mrac::ExperimentConfig cfg = mrac::example_config();
  cfg.steps = state.range(0);
  for (auto _ : state) {
    auto run = mrac::run_closed_loop(cfg);
    benchmark::DoNotOptimize(run.trace.rows.back().y);
  }
  state.SetItemsProcessed(state.iterations() * (cfg.steps + 1));
}
BENCHMARK(BM_ClosedLoopHorizon)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto run = mrac::reproduce_example();
  for (auto _ : state) {
    auto report = mrac::verify(run.trace, run.truth, 0.9);
    benchmark::DoNotOptimize(report.checks.size());
  }
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_TraceCsv(benchmark::State& state) {
  const auto run = mrac::reproduce_example();
  for (auto _ : state) {
    auto text = mrac::trace_csv(run.trace);
    benchmark::DoNotOptimize(text.data());
  }
}
BENCHMARK(BM_TraceCsv)->Unit(benchmark::kMillisecond);

void BM_PredictorSplit(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  const mrac::PolyZ l{1.0, -0.3, 0.1, 0.02};
  const mrac::PolyZ a{1.0, 0.5, -0.25, 0.1};
  for (auto _ : state) {
    auto split = mrac::predictor_split(l, a, d);
    benchmark::DoNotOptimize(split.alpha.coeffs().data());
  }
}
BENCHMARK(BM_PredictorSplit)->DenseRange(1, 4);

void BM_MaxRootModulus(benchmark::State& state) {
  const mrac::PolyZ p{1.0, -0.9, 0.4, -0.1, 0.05, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(mrac::max_root_modulus(p));
}
BENCHMARK(BM_MaxRootModulus);

}  // namespace

BENCHMARK_MAIN();
