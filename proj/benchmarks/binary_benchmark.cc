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

#include "benchmark/benchmark.h"
#include "graphfair/binary.h"
#include "graphfair/generators.h"

namespace graphfair {
namespace {

GraphicalInstance BinaryInstance(int agents) {
  return GenerateRandom({agents, 8.0 / agents, {0, 1}, 1});
}

void BM_SolveEfBinary(benchmark::State& state) {
  const GraphicalInstance g = BinaryInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveEfBinary(g));
  state.SetComplexityN(g.num_items());
}
BENCHMARK(BM_SolveEfBinary)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_SolveEfxBinary(benchmark::State& state) {
  const GraphicalInstance g = BinaryInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveEfxBinary(g));
  state.SetComplexityN(g.num_items());
}
BENCHMARK(BM_SolveEfxBinary)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}  // namespace
}  // namespace graphfair
