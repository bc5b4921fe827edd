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

#include "graphfair/binary.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

#include "graphfair/errors.h"

namespace graphfair {
namespace {

// A connected component of the symmetric 1/1 subgraph.
struct Component {
  std::vector<AgentId> vertices;  // ascending
  std::vector<ItemId> items;      // ascending
  bool IsTree() const { return items.size() + 1 == vertices.size(); }
};

class BinarySolver {
 public:
  explicit BinarySolver(const GraphicalInstance& instance)
      : instance_(instance),
        allocation_(Allocation::Unassigned(instance.num_items())),
        utility_(instance.num_agents(), 0),
        adjacency_(instance.num_agents()) {
    if (!instance.IsBinary()) {
      throw InputError("binary solver requires utilities in {0,1}");
    }
    for (ItemId item = 0; item < instance.num_items(); ++item) {
      const Edge& e = instance.edge(item);
      if (e.value_a == 1 && e.value_b == 1) {
        adjacency_[e.a].push_back(item);
        adjacency_[e.b].push_back(item);
      } else if (e.value_a == 1) {
        Give(item, e.a);
      } else if (e.value_b == 1) {
        Give(item, e.b);
      }
    }
    special_.resize(instance.num_agents());
    for (AgentId v = 0; v < instance.num_agents(); ++v) {
      special_[v] = utility_[v] >= instance.VMax(v);
    }
    FindComponents();
  }

  const std::vector<Component>& components() const { return components_; }
  Allocation& allocation() { return allocation_; }

  AgentId FirstSpecial(const Component& c) const {
    for (AgentId v : c.vertices) {
      if (special_[v]) return v;
    }
    return kUnassigned;
  }

  AgentId MinDegreeVertex(const Component& c) const {
    AgentId best = c.vertices.front();
    for (AgentId v : c.vertices) {
      if (adjacency_[v].size() < adjacency_[best].size()) best = v;
    }
    return best;
  }

  // Every vertex other than the roots receives the edge from its BFS parent.
  void OrientFromRoots(const std::vector<AgentId>& roots) {
    std::vector<char>& seen = scratch_seen_;
    std::deque<AgentId> queue(roots.begin(), roots.end());
    for (AgentId r : roots) seen[r] = 1;
    while (!queue.empty()) {
      const AgentId x = queue.front();
      queue.pop_front();
      for (ItemId item : adjacency_[x]) {
        const AgentId y = instance_.edge(item).Other(x);
        if (seen[y]) continue;
        seen[y] = 1;
        Give(item, y);
        queue.push_back(y);
      }
    }
  }

  void OrientTree(const Component& c, AgentId root) {
    ResetSeen(c);
    OrientFromRoots({root});
  }

  void OrientCyclic(const Component& c) {
    const std::vector<ItemId> cycle = FindCycle(c);
    // cycle[i] joins the i-th and (i+1)-th cycle vertex; hand each edge to
    // the earlier of the two so every cycle vertex gets exactly one.
    std::vector<AgentId> cycle_vertices;
    AgentId current = cycle_start_;
    for (ItemId item : cycle) {
      Give(item, current);
      cycle_vertices.push_back(current);
      current = instance_.edge(item).Other(current);
    }
    ResetSeen(c);
    OrientFromRoots(cycle_vertices);
    for (ItemId item : c.items) {
      if (allocation_.owner(item) == kUnassigned) {
        Give(item, instance_.edge(item).LowEndpoint());
      }
    }
  }

  // Moves single units of utility along owned-edge paths from agents with
  // load L to agents with load <= L - 2 until no such path remains.
  void Balance(const Component& c) {
    std::vector<ItemId> via(instance_.num_agents(), kUnassigned);
    std::vector<int> stamp(instance_.num_agents(), 0);
    int round = 0;
    std::vector<AgentId> order = c.vertices;
    std::deque<AgentId> queue;
    bool improved = true;
    while (improved) {
      improved = false;
      std::stable_sort(order.begin(), order.end(), [&](AgentId x, AgentId y) {
        return utility_[x] > utility_[y];
      });
      for (AgentId source : order) {
        while (FlipImprovingPath(source, ++round, stamp, via, queue)) {
          improved = true;
        }
      }
    }
  }

  // Moves one unit of load from `source` along owned edges to an agent
  // holding at least two units less. Returns false if none is reachable.
  bool FlipImprovingPath(AgentId source, int round, std::vector<int>& stamp,
                         std::vector<ItemId>& via,
                         std::deque<AgentId>& queue) {
    stamp[source] = round;
    queue.assign(1, source);
    AgentId target = kUnassigned;
    while (!queue.empty() && target == kUnassigned) {
      const AgentId x = queue.front();
      queue.pop_front();
      for (ItemId item : adjacency_[x]) {
        if (allocation_.owner(item) != x) continue;
        const AgentId y = instance_.edge(item).Other(x);
        if (stamp[y] == round) continue;
        stamp[y] = round;
        via[y] = item;
        if (utility_[y] + 2 <= utility_[source]) {
          target = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (target == kUnassigned) return false;
    for (AgentId y = target; y != source;) {
      const ItemId item = via[y];
      const AgentId x = instance_.edge(item).Other(y);
      Take(item);
      Give(item, y);
      y = x;
    }
    return true;
  }

  // Assigns 0/0 edges to agents no one envies; prefers endpoints.
  void PlaceZeroEdgesWithNonEnvied() {
    std::vector<char> envied(instance_.num_agents(), 0);
    std::vector<Utility> seen(instance_.num_agents(), 0);
    for (AgentId i = 0; i < instance_.num_agents(); ++i) {
      for (ItemId item : instance_.IncidentItems(i)) {
        const AgentId j = allocation_.owner(item);
        if (j != kUnassigned && j != i) seen[j] += instance_.Value(i, item);
      }
      for (ItemId item : instance_.IncidentItems(i)) {
        const AgentId j = allocation_.owner(item);
        if (j == kUnassigned || j == i) continue;
        if (seen[j] > utility_[i]) envied[j] = 1;
        seen[j] = 0;
      }
    }
    const auto first_free =
        std::find(envied.begin(), envied.end(), 0) - envied.begin();
    for (ItemId item = 0; item < instance_.num_items(); ++item) {
      if (allocation_.owner(item) != kUnassigned) continue;
      const Edge& e = instance_.edge(item);
      if (!envied[e.LowEndpoint()]) {
        Give(item, e.LowEndpoint());
      } else if (!envied[e.HighEndpoint()]) {
        Give(item, e.HighEndpoint());
      } else if (first_free < instance_.num_agents()) {
        Give(item, static_cast<AgentId>(first_free));
      } else {
        throw std::logic_error("no envy-free recipient for a 0/0 edge");
      }
    }
  }

  void PlaceZeroEdgesAtLowEndpoint() {
    for (ItemId item = 0; item < instance_.num_items(); ++item) {
      if (allocation_.owner(item) == kUnassigned) {
        Give(item, instance_.edge(item).LowEndpoint());
      }
    }
  }

 private:
  void Give(ItemId item, AgentId agent) {
    allocation_.Assign(item, agent);
    utility_[agent] += instance_.Value(agent, item);
  }
  void Take(ItemId item) {
    const AgentId owner = allocation_.owner(item);
    utility_[owner] -= instance_.Value(owner, item);
    allocation_.Assign(item, kUnassigned);
  }

  void ResetSeen(const Component& c) {
    scratch_seen_.resize(instance_.num_agents());
    for (AgentId v : c.vertices) scratch_seen_[v] = 0;
  }

  void FindComponents() {
    std::vector<char> seen(instance_.num_agents(), 0);
    for (AgentId start = 0; start < instance_.num_agents(); ++start) {
      if (seen[start] || adjacency_[start].empty()) continue;
      Component c;
      std::deque<AgentId> queue = {start};
      seen[start] = 1;
      while (!queue.empty()) {
        const AgentId x = queue.front();
        queue.pop_front();
        c.vertices.push_back(x);
        for (ItemId item : adjacency_[x]) {
          const AgentId y = instance_.edge(item).Other(x);
          if (x < y) c.items.push_back(item);
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
      }
      std::sort(c.vertices.begin(), c.vertices.end());
      std::sort(c.items.begin(), c.items.end());
      components_.push_back(std::move(c));
    }
  }

  // First cycle met by an iterative DFS from the component's lowest vertex,
  // returned as consecutive edges starting at the cycle's DFS-shallowest
  // vertex.
  std::vector<ItemId> FindCycle(const Component& c) {
    const int n = instance_.num_agents();
    std::vector<int> depth(n, -1);
    std::vector<ItemId> parent_item(n, kUnassigned);
    struct Frame {
      AgentId vertex;
      std::size_t next;
    };
    std::vector<Frame> stack = {{c.vertices.front(), 0}};
    depth[c.vertices.front()] = 0;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const AgentId x = top.vertex;
      if (top.next == adjacency_[x].size()) {
        stack.pop_back();
        continue;
      }
      const ItemId item = adjacency_[x][top.next++];
      if (item == parent_item[x]) continue;
      const AgentId y = instance_.edge(item).Other(x);
      if (depth[y] < 0) {
        depth[y] = depth[x] + 1;
        parent_item[y] = item;
        stack.push_back({y, 0});
        continue;
      }
      if (depth[y] > depth[x]) continue;  // already-explored descendant
      // Back edge x -> ancestor y.
      std::vector<ItemId> path;
      for (AgentId v = x; v != y;) {
        path.push_back(parent_item[v]);
        v = instance_.edge(parent_item[v]).Other(v);
      }
      std::reverse(path.begin(), path.end());
      path.push_back(item);
      cycle_start_ = y;
      return path;
    }
    throw std::logic_error("component expected to contain a cycle");
  }

  const GraphicalInstance& instance_;
  Allocation allocation_;
  std::vector<Utility> utility_;
  std::vector<std::vector<ItemId>> adjacency_;  // symmetric 1/1 edges only
  std::vector<char> special_;
  std::vector<Component> components_;
  std::vector<char> scratch_seen_;
  AgentId cycle_start_ = kUnassigned;
};

}  // namespace

std::optional<Allocation> SolveEfBinary(const GraphicalInstance& instance) {
  BinarySolver solver(instance);
  for (const Component& c : solver.components()) {
    if (!c.IsTree()) {
      solver.OrientCyclic(c);
      continue;
    }
    const AgentId root = solver.FirstSpecial(c);
    if (root == kUnassigned) return std::nullopt;
    solver.OrientTree(c, root);
  }
  solver.PlaceZeroEdgesAtLowEndpoint();
  return solver.allocation();
}

Allocation SolveEfxBinary(const GraphicalInstance& instance) {
  BinarySolver solver(instance);
  for (const Component& c : solver.components()) {
    if (!c.IsTree()) {
      solver.OrientCyclic(c);
      solver.Balance(c);
      continue;
    }
    const AgentId special = solver.FirstSpecial(c);
    if (special == kUnassigned) {
      solver.OrientTree(c, solver.MinDegreeVertex(c));
    } else {
      solver.OrientTree(c, special);
      solver.Balance(c);
    }
  }
  solver.PlaceZeroEdgesWithNonEnvied();
  return solver.allocation();
}

}  // namespace graphfair
