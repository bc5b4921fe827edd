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

#ifndef GRAPHFAIR_INSTANCE_H_
#define GRAPHFAIR_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphfair {

using AgentId = int;
using ItemId = int;
using Utility = std::int64_t;

inline constexpr AgentId kUnassigned = -1;

// An edge-item valued by exactly its two endpoints.
struct Edge {
  AgentId a = 0;
  AgentId b = 0;
  Utility value_a = 0;
  Utility value_b = 0;

  bool IsIncident(AgentId agent) const { return agent == a || agent == b; }
  // Value `agent` assigns to this item; zero for non-endpoints.
  Utility ValueFor(AgentId agent) const {
    if (agent == a) return value_a;
    if (agent == b) return value_b;
    return 0;
  }
  AgentId Other(AgentId endpoint) const { return endpoint == a ? b : a; }
  AgentId LowEndpoint() const { return a < b ? a : b; }
  AgentId HighEndpoint() const { return a < b ? b : a; }
  Utility MaxValue() const { return value_a > value_b ? value_a : value_b; }
  bool IsSymmetric() const { return value_a == value_b; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A simple graph whose vertices are agents and whose edges are items.
// Immutable once constructed; the constructor validates every invariant and
// throws InputError on violation.
class GraphicalInstance {
 public:
  GraphicalInstance(int num_agents, std::vector<Edge> edges);

  int num_agents() const { return num_agents_; }
  int num_items() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(ItemId item) const { return edges_.at(item); }

  // Items incident on `agent`, ascending.
  std::span<const ItemId> IncidentItems(AgentId agent) const {
    return incident_.at(agent);
  }
  Utility Value(AgentId agent, ItemId item) const {
    return edges_.at(item).ValueFor(agent);
  }
  // Largest value `agent` has for any single item; 0 if none.
  Utility VMax(AgentId agent) const { return v_max_.at(agent); }

  // Sorted set of all utilities occurring in the instance, always with 0.
  std::span<const Utility> DistinctUtilities() const { return distinct_; }
  bool IsBinary() const;

  // Edge joining two agents, if any.
  ItemId FindItem(AgentId u, AgentId v) const;

  friend bool operator==(const GraphicalInstance& x,
                         const GraphicalInstance& y) {
    return x.num_agents_ == y.num_agents_ && x.edges_ == y.edges_;
  }

 private:
  int num_agents_;
  std::vector<Edge> edges_;
  std::vector<std::vector<ItemId>> incident_;
  std::vector<Utility> v_max_;
  std::vector<Utility> distinct_;
};

// Map from item to owning agent. Items may be left unassigned while an
// allocation is being built; fairness predicates require completeness.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<AgentId> owners) : owner_(std::move(owners)) {}

  static Allocation Unassigned(int num_items) {
    return Allocation(std::vector<AgentId>(num_items, kUnassigned));
  }

  int num_items() const { return static_cast<int>(owner_.size()); }
  AgentId owner(ItemId item) const { return owner_.at(item); }
  void Assign(ItemId item, AgentId agent) { owner_.at(item) = agent; }
  std::span<const AgentId> owners() const { return owner_; }

  bool IsComplete() const;
  // Items owned by `agent`, ascending.
  std::vector<ItemId> Bundle(AgentId agent) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation& x, const Allocation& y) {
    return x.owner_ <=> y.owner_;
  }

 private:
  std::vector<AgentId> owner_;
};

}  // namespace graphfair

#endif  // GRAPHFAIR_INSTANCE_H_
