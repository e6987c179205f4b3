// Copyright 2026 The bribelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "bribelab/attack_analytics.hpp"
#include "bribelab/monte_carlo.hpp"
#include "bribelab/value_engine.hpp"

namespace {

using namespace bribelab;

AttackParams case_study(int horizon) { return AttackParams{horizon, 150, 0.05, 0.4, 158000}; }

void BM_BuildValueTable(benchmark::State& state) {
  const AttackParams p = case_study(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_value_table(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildValueTable)->Arg(400)->Arg(1000)->Arg(2500)->Arg(5000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Analyze(benchmark::State& state) {
  const AttackParams p = case_study(static_cast<int>(state.range(0)));
  const ValueTable table = build_value_table(p);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(p, table));
}
BENCHMARK(BM_Analyze)->Arg(400)->Arg(2500)->Unit(benchmark::kMillisecond);

void BM_RunTrials(benchmark::State& state) {
  const AttackParams p = case_study(2500);
  const ValueTable table = build_value_table(p);
  const MinerPopulation population = MinerPopulation::equal_split(p);
  const auto strategies = equilibrium_strategies(population);
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(p, population, table, strategies, 1, trials, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_RunTrials)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
