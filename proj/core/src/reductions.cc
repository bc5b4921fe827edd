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

#include "graphfair/reductions.h"

#include <algorithm>
#include <limits>
#include <string>

#include "graphfair/errors.h"
#include "graphfair/fairness.h"

namespace graphfair {

McisInstance::McisInstance(std::vector<std::vector<int>> classes,
                           std::vector<std::pair<int, int>> edges)
    : classes_(std::move(classes)), edges_(std::move(edges)) {
  if (classes_.empty()) throw InputError("MCIS instance needs a class");
  for (const auto& c : classes_) {
    if (c.empty()) throw InputError("MCIS classes must be non-empty");
    num_vertices_ += static_cast<int>(c.size());
  }
  class_of_.assign(num_vertices_, -1);
  for (int i = 0; i < num_classes(); ++i) {
    for (int v : classes_[i]) {
      if (v < 0 || v >= num_vertices_) {
        throw InputError("MCIS vertex " + std::to_string(v) +
                         " out of range [0, " + std::to_string(num_vertices_) +
                         ")");
      }
      if (class_of_[v] != -1) {
        throw InputError("MCIS vertex " + std::to_string(v) +
                         " appears in more than one class");
      }
      class_of_[v] = i;
    }
  }
  adjacent_.assign(num_vertices_, std::vector<char>(num_vertices_, 0));
  std::vector<int> degree(num_vertices_, 0);
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_) {
      throw InputError("MCIS edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range");
    }
    if (u == v) throw InputError("MCIS self-loop on " + std::to_string(u));
    if (adjacent_[u][v]) {
      throw InputError("MCIS duplicate edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
    }
    adjacent_[u][v] = adjacent_[v][u] = 1;
    ++degree[u];
    ++degree[v];
  }
  degree_ = degree[0];
  for (int v = 0; v < num_vertices_; ++v) {
    if (degree[v] != degree_) {
      throw InputError("MCIS graph is not regular: vertex " +
                       std::to_string(v) + " has degree " +
                       std::to_string(degree[v]) + ", vertex 0 has " +
                       std::to_string(degree_));
    }
  }
}

bool McisInstance::Adjacent(int u, int v) const {
  return adjacent_.at(u).at(v) != 0;
}

namespace {

void RequireDegree(const McisInstance& mcis, int minimum, const char* what) {
  if (mcis.degree() < minimum) {
    throw InputError(std::string(what) + " needs a regular graph of degree >= " +
                     std::to_string(minimum) + ", got " +
                     std::to_string(mcis.degree()));
  }
}

std::vector<Edge> OriginalEdges(const McisInstance& mcis) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : mcis.edges()) edges.push_back({u, v, 1, 1});
  return edges;
}

}  // namespace

GraphicalInstance ReduceMcisToEf(const McisInstance& mcis) {
  RequireDegree(mcis, 1, "EF reduction");
  const Utility d = mcis.degree();
  std::vector<Edge> edges = OriginalEdges(mcis);
  for (int i = 0; i < mcis.num_classes(); ++i) {
    for (int v : mcis.classes()[i]) {
      edges.push_back({v, EfHubAgent(mcis, i), d, d});
    }
  }
  return GraphicalInstance(mcis.num_vertices() + mcis.num_classes(),
                           std::move(edges));
}

GraphicalInstance ReduceMcisToUmEfx(const McisInstance& mcis,
                                    UmEfxGadget gadget) {
  RequireDegree(mcis, 2, "UM+EFX reduction");
  const Utility d = mcis.degree();
  const Utility middle_for_w3 = gadget == UmEfxGadget::kPublished ? d : d + 1;
  std::vector<Edge> edges = OriginalEdges(mcis);
  for (int i = 0; i < mcis.num_classes(); ++i) {
    const int w1 = UmEfxPathAgent(mcis, i, 1);
    const int w2 = UmEfxPathAgent(mcis, i, 2);
    const int w3 = UmEfxPathAgent(mcis, i, 3);
    const int w4 = UmEfxPathAgent(mcis, i, 4);
    edges.push_back({w1, w2, 0, 1});
    edges.push_back({w2, w3, d, middle_for_w3});
    edges.push_back({w3, w4, d, 0});
    for (int v : mcis.classes()[i]) edges.push_back({v, w2, d, d});
  }
  return GraphicalInstance(mcis.num_vertices() + 4 * mcis.num_classes(),
                           std::move(edges));
}

EgalitarianEfxInstance ReduceMcisToEmEfx(const McisInstance& mcis) {
  return {ReduceMcisToEf(mcis), static_cast<Utility>(mcis.degree())};
}

bool IsColorfulIndependentSet(const McisInstance& mcis,
                              const std::vector<int>& vertices) {
  if (static_cast<int>(vertices.size()) != mcis.num_classes()) return false;
  std::vector<char> class_hit(mcis.num_classes(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= mcis.num_vertices()) return false;
    if (class_hit[mcis.ClassOf(v)]++) return false;
  }
  for (std::size_t x = 0; x < vertices.size(); ++x) {
    for (std::size_t y = x + 1; y < vertices.size(); ++y) {
      if (mcis.Adjacent(vertices[x], vertices[y])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> SolveMcisBruteForce(const McisInstance& mcis,
                                                    std::uint64_t budget) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t states = 1;
  for (const auto& c : mcis.classes()) {
    states = states > kMax / c.size() ? kMax : states * c.size();
  }
  if (states > budget) {
    throw CapacityError("MCIS search space of " +
                        (states == kMax ? std::string("more than 2^64")
                                        : std::to_string(states)) +
                        " choices exceeds budget " + std::to_string(budget));
  }
  const int k = mcis.num_classes();
  std::vector<int> pick;
  // Depth-first over classes; prunes as soon as a pick hits an earlier one.
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int v : mcis.classes()[i]) {
      bool clash = false;
      for (int u : pick) clash |= mcis.Adjacent(u, v);
      if (clash) continue;
      pick.push_back(v);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return pick;
}

std::optional<std::vector<int>> ExtractIndependentSet(
    const McisInstance& mcis, const Allocation& allocation) {
  const GraphicalInstance reduced = ReduceMcisToEf(mcis);
  if (!IsEnvyFree(reduced, allocation)) {
    throw PreconditionError(
        "independent-set extraction needs an envy-free allocation");
  }
  const std::vector<Utility> utility = AgentUtilities(reduced, allocation);
  const Utility d = mcis.degree();
  std::vector<int> chosen;
  for (int i = 0; i < mcis.num_classes(); ++i) {
    std::vector<int> members = mcis.classes()[i];
    std::sort(members.begin(), members.end());
    const int hub = EfHubAgent(mcis, i);
    int pick = -1;
    for (int v : members) {
      if (allocation.owner(reduced.FindItem(v, hub)) == v) continue;
      if (utility[v] >= d) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    chosen.push_back(pick);
  }
  if (!IsColorfulIndependentSet(mcis, chosen)) return std::nullopt;
  return chosen;
}

}  // namespace graphfair
