// Copyright 2026 The fairalloc Authors.
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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "fairalloc/fairness.hpp"
#include "fairalloc/random_profile.hpp"
#include "fairalloc/theoremlab.hpp"
#include "fairalloc/welfarist.hpp"

namespace fairalloc {
namespace {

Profile bench_profile(std::int64_t agents, std::int64_t goods) {
  RandomProfileSpec spec;
  spec.agents = static_cast<std::size_t>(agents);
  spec.goods = static_cast<std::size_t>(goods);
  spec.min_utility = 1;
  return random_profile(spec, 42, 0);
}

void BM_ExhaustiveScan(benchmark::State& state) {
  const Profile p = bench_profile(state.range(0), state.range(1));
  const WelfareFunction f = WelfareFunction::power(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_welfare(p, f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(checked_allocation_count(
                              p.agent_count(), p.good_count(), kDefaultEnumerationBudget)));
}
BENCHMARK(BM_ExhaustiveScan)->Args({2, 10})->Args({3, 8})->Args({3, 10});

void BM_BranchAndBound(benchmark::State& state) {
  const Profile p = bench_profile(state.range(0), state.range(1));
  const WelfareFunction f = WelfareFunction::power(0.5);
  SolveOptions options;
  options.strategy = SearchStrategy::kBranchAndBound;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_welfare(p, f, options));
}
BENCHMARK(BM_BranchAndBound)->Args({2, 10})->Args({3, 8})->Args({3, 10});

void BM_ExactNash(benchmark::State& state) {
  const Profile p = bench_profile(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mnw(p));
}
BENCHMARK(BM_ExactNash)->Args({2, 10})->Args({3, 8});

void BM_ParetoCheck(benchmark::State& state) {
  const Profile p = bench_profile(state.range(0), state.range(1));
  const Allocation a = maximize_welfare(p, WelfareFunction::affine()).allocation;
  for (auto _ : state) benchmark::DoNotOptimize(is_pareto_optimal(p, a));
}
BENCHMARK(BM_ParetoCheck)->Args({2, 10})->Args({3, 8});

void BM_Ef1Check(benchmark::State& state) {
  const Profile p = bench_profile(state.range(0), state.range(1));
  const Allocation a = mnw(p).allocation;
  for (auto _ : state) benchmark::DoNotOptimize(is_ef1(p, a));
}
BENCHMARK(BM_Ef1Check)->Args({3, 8});

void BM_FindCounterexample(benchmark::State& state) {
  const WelfareFunction f = WelfareFunction::power(2);
  const auto grid = default_search_grid();
  for (auto _ : state) benchmark::DoNotOptimize(find_counterexample(f, 5, grid));
}
BENCHMARK(BM_FindCounterexample);

}  // namespace
}  // namespace fairalloc

BENCHMARK_MAIN();
