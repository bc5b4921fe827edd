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

#include "graphfair/generators.h"

#include <random>
#include <string>

#include "graphfair/errors.h"

namespace graphfair {

GraphicalInstance GenerateStar(int d) {
  if (d < 1) throw InputError("star needs d >= 1, got " + std::to_string(d));
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= d; ++leaf) edges.push_back({0, leaf, d, 1});
  return GraphicalInstance(d + 1, std::move(edges));
}

GraphicalInstance GenerateRandom(const RandomInstanceSpec& spec) {
  if (spec.num_agents < 1) {
    throw InputError("random instance needs at least one agent");
  }
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
  if (spec.values.empty()) throw InputError("value set must be non-empty");
  for (Utility v : spec.values) {
    if (v < 0) throw InputError("values must be nonnegative");
  }
  std::mt19937_64 rng(spec.seed);
  const auto draw_value = [&] {
    return spec.values[rng() % spec.values.size()];
  };
  std::vector<Edge> edges;
  for (AgentId a = 0; a < spec.num_agents; ++a) {
    for (AgentId b = a + 1; b < spec.num_agents; ++b) {
      const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r >= spec.edge_probability) continue;
      const Utility value_a = draw_value();
      const Utility value_b = draw_value();
      edges.push_back({a, b, value_a, value_b});
    }
  }
  return GraphicalInstance(spec.num_agents, std::move(edges));
}

}  // namespace graphfair
