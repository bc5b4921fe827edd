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

#include "graphfair/vertex_cover.h"

#include <algorithm>

namespace graphfair {
namespace {

bool CoverWithin(const GraphicalInstance& instance, int budget,
                 std::vector<char>& in_cover, std::vector<AgentId>& chosen) {
  ItemId uncovered = kUnassigned;
  for (ItemId item = 0; item < instance.num_items(); ++item) {
    const Edge& e = instance.edge(item);
    if (!in_cover[e.a] && !in_cover[e.b]) {
      uncovered = item;
      break;
    }
  }
  if (uncovered == kUnassigned) return true;
  if (budget == 0) return false;
  const Edge& e = instance.edge(uncovered);
  for (AgentId pick : {e.LowEndpoint(), e.HighEndpoint()}) {
    in_cover[pick] = 1;
    chosen.push_back(pick);
    if (CoverWithin(instance, budget - 1, in_cover, chosen)) return true;
    chosen.pop_back();
    in_cover[pick] = 0;
  }
  return false;
}

}  // namespace

VertexCoverDecomposition MinVertexCover(const GraphicalInstance& instance) {
  std::vector<char> in_cover(instance.num_agents(), 0);
  std::vector<AgentId> chosen;
  for (int budget = 0;; ++budget) {
    if (CoverWithin(instance, budget, in_cover, chosen)) break;
  }
  VertexCoverDecomposition result;
  result.cover = chosen;
  std::sort(result.cover.begin(), result.cover.end());
  for (AgentId v = 0; v < instance.num_agents(); ++v) {
    if (!in_cover[v]) result.independent.push_back(v);
  }
  return result;
}

bool IsValidDecomposition(const GraphicalInstance& instance,
                          const VertexCoverDecomposition& decomposition) {
  std::vector<int> role(instance.num_agents(), 0);
  for (AgentId v : decomposition.cover) {
    if (v < 0 || v >= instance.num_agents() || role[v] != 0) return false;
    role[v] = 1;
  }
  for (AgentId v : decomposition.independent) {
    if (v < 0 || v >= instance.num_agents() || role[v] != 0) return false;
    role[v] = 2;
  }
  if (std::count(role.begin(), role.end(), 0) != 0) return false;
  for (const Edge& e : instance.edges()) {
    if (role[e.a] == 2 && role[e.b] == 2) return false;
  }
  return true;
}

}  // namespace graphfair
