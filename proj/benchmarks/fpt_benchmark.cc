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

#include <vector>

#include "benchmark/benchmark.h"
#include "graphfair/fpt.h"
#include "graphfair/generators.h"
#include "graphfair/instance.h"

namespace graphfair {
namespace {

// k hubs, each joined to every one of `leaves` independent vertices and to
// each other, so the vertex cover number is exactly k.
GraphicalInstance SplitGraph(int k, int leaves, Utility d) {
  std::vector<Edge> edges;
  for (int s = 0; s < k; ++s) {
    for (int t = s + 1; t < k; ++t) edges.push_back({s, t, 1, 1});
    for (int v = 0; v < leaves; ++v) {
      edges.push_back({s, k + v, (v % 2) ? d : 1, (v % 3) ? 1 : d});
    }
  }
  return GraphicalInstance(k + leaves, edges);
}

void BM_SolveEfFptByCover(benchmark::State& state) {
  const GraphicalInstance g =
      SplitGraph(static_cast<int>(state.range(0)), 12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(SolveEfFpt(g));
}
BENCHMARK(BM_SolveEfFptByCover)->DenseRange(1, 4);

void BM_SolveEfFptByLeaves(benchmark::State& state) {
  const GraphicalInstance g =
      SplitGraph(2, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(SolveEfFpt(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveEfFptByLeaves)->RangeMultiplier(4)->Range(8, 2048)
    ->Complexity();

void BM_SolveEfFptRandom(benchmark::State& state) {
  const GraphicalInstance g = GenerateRandom(
      {static_cast<int>(state.range(0)), 0.5, {0, 1, 5}, 3});
  for (auto _ : state) benchmark::DoNotOptimize(SolveEfFpt(g));
}
BENCHMARK(BM_SolveEfFptRandom)->DenseRange(4, 8, 2);

}  // namespace
}  // namespace graphfair
