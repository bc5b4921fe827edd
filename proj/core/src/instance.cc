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

#include "graphfair/instance.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "graphfair/errors.h"

namespace graphfair {

GraphicalInstance::GraphicalInstance(int num_agents, std::vector<Edge> edges)
    : num_agents_(num_agents), edges_(std::move(edges)) {
  if (num_agents_ < 1) {
    throw InputError("instance needs at least one agent, got " +
                     std::to_string(num_agents_));
  }
  incident_.assign(num_agents_, {});
  v_max_.assign(num_agents_, 0);
  std::set<std::pair<AgentId, AgentId>> pairs;
  std::set<Utility> values = {0};
  for (ItemId item = 0; item < num_items(); ++item) {
    const Edge& e = edges_[item];
    const std::string where = "edge " + std::to_string(item) + ": ";
    if (e.a < 0 || e.a >= num_agents_ || e.b < 0 || e.b >= num_agents_) {
      throw InputError(where + "endpoint out of range [0, " +
                       std::to_string(num_agents_) + ")");
    }
    if (e.a == e.b) throw InputError(where + "self-loop on agent " +
                                     std::to_string(e.a));
    if (e.value_a < 0 || e.value_b < 0) {
      throw InputError(where + "utilities must be nonnegative");
    }
    if (!pairs.emplace(e.LowEndpoint(), e.HighEndpoint()).second) {
      throw InputError(where + "duplicate edge between agents " +
                       std::to_string(e.LowEndpoint()) + " and " +
                       std::to_string(e.HighEndpoint()));
    }
    incident_[e.a].push_back(item);
    incident_[e.b].push_back(item);
    v_max_[e.a] = std::max(v_max_[e.a], e.value_a);
    v_max_[e.b] = std::max(v_max_[e.b], e.value_b);
    values.insert(e.value_a);
    values.insert(e.value_b);
  }
  distinct_.assign(values.begin(), values.end());
}

bool GraphicalInstance::IsBinary() const {
  return std::all_of(distinct_.begin(), distinct_.end(),
                     [](Utility u) { return u == 0 || u == 1; });
}

ItemId GraphicalInstance::FindItem(AgentId u, AgentId v) const {
  for (ItemId item : IncidentItems(u)) {
    if (edges_[item].Other(u) == v) return item;
  }
  return kUnassigned;
}

bool Allocation::IsComplete() const {
  return std::none_of(owner_.begin(), owner_.end(),
                      [](AgentId a) { return a == kUnassigned; });
}

std::vector<ItemId> Allocation::Bundle(AgentId agent) const {
  std::vector<ItemId> bundle;
  for (ItemId item = 0; item < num_items(); ++item) {
    if (owner_[item] == agent) bundle.push_back(item);
  }
  return bundle;
}

}  // namespace graphfair
