// Copyright 2026 The weylmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against OpenMP kernels: inverse-DFT rates over a time
// grid and brute-force subgroup enumeration. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "oracles/subgroup_oracle.hpp"
#include "weyl/dynamics.hpp"
#include "weyl/kernels.hpp"

namespace {

weyl::WeylDynamics random_direction(int d) {
  weyl::WeylMapSpec w{d, std::vector<double>(static_cast<size_t>(d) * d)};
  double total = 0.0;
  for (size_t a = 1; a < w.weights.size(); ++a) total += (w.weights[a] = 1.0 + static_cast<double>(a % 7));
  for (double& x : w.weights) x /= total;
  return weyl::WeylDynamics(std::move(w), weyl::ProbabilityProfile::exponential(0.3, 1.0));
}

void BM_DftRatesSerial(benchmark::State& state) {
  const auto dyn = random_direction(static_cast<int>(state.range(0)));
  const auto grid = weyl::TimeGrid{1e-3, 10.0, 256, weyl::GridSpacing::Log}.times();
  for (auto _ : state) benchmark::DoNotOptimize(weyl::kernels::dft_rates_on_grid_serial(dyn, grid));
}

void BM_DftRatesOpenMP(benchmark::State& state) {
  const auto dyn = random_direction(static_cast<int>(state.range(0)));
  const auto grid = weyl::TimeGrid{1e-3, 10.0, 256, weyl::GridSpacing::Log}.times();
  state.counters["threads"] = weyl::kernels::max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(weyl::kernels::dft_rates_on_grid(dyn, grid));
}

void BM_SubgroupsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weyl::oracle::all_subgroups_serial(static_cast<int>(state.range(0))));
}

void BM_SubgroupsOpenMP(benchmark::State& state) {
  state.counters["threads"] = weyl::kernels::max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(weyl::oracle::all_subgroups(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_DftRatesSerial)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DftRatesOpenMP)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgroupsSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgroupsOpenMP)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
