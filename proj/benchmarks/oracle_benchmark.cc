// Copyright 2026 The graphfair Authors
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
#include <span>

#include "benchmark/benchmark.h"
#include "graphfair/generators.h"
#include "graphfair/oracle.h"

namespace graphfair {
namespace {

void BM_EnumerateAllocations(benchmark::State& state) {
  const GraphicalInstance g = GenerateRandom({4, 0.9, {0, 1, 3}, 5});
  for (auto _ : state) {
    std::int64_t visited = 0;
    ForEachAllocation(g, SearchMode::kAllAllocations, UINT64_MAX,
                      [&](std::span<const AgentId>) {
                        ++visited;
                        return true;
                      });
    benchmark::DoNotOptimize(visited);
  }
  state.SetItemsProcessed(state.iterations() *
                          StateCount(g, SearchMode::kAllAllocations));
}
BENCHMARK(BM_EnumerateAllocations);

void BM_MaxWelfareNashEfx(benchmark::State& state) {
  const GraphicalInstance g = GenerateRandom({5, 0.6, {0, 1, 3}, 9});
  OracleOptions options;
  options.workers = static_cast<int>(state.range(0));
  options.budget = UINT64_MAX;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxWelfare(g, WelfareKind::kNash,
                                        FairnessConstraint::kEfx, options));
  }
  state.SetItemsProcessed(state.iterations() *
                          StateCount(g, SearchMode::kAllAllocations));
}
BENCHMARK(BM_MaxWelfareNashEfx)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_StarPriceOfEfx(benchmark::State& state) {
  const GraphicalInstance star = GenerateStar(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PriceOfEfx(star, WelfareKind::kUtilitarian));
  }
}
BENCHMARK(BM_StarPriceOfEfx)->DenseRange(2, 6);

void BM_ExistsEfOrientations(benchmark::State& state) {
  const GraphicalInstance g = GenerateRandom(
      {static_cast<int>(state.range(0)), 0.5, {0, 1, 2}, 17});
  OracleOptions options;
  options.mode = SearchMode::kOrientations;
  options.budget = UINT64_MAX;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExistsFair(g, Fairness::kEnvyFree, options));
  }
}
BENCHMARK(BM_ExistsEfOrientations)->DenseRange(4, 7);

}  // namespace
}  // namespace graphfair
