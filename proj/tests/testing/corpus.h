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

#ifndef GRAPHFAIR_TESTS_TESTING_CORPUS_H_
#define GRAPHFAIR_TESTS_TESTING_CORPUS_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "graphfair/generators.h"
#include "graphfair/instance.h"
#include "graphfair/oracle.h"
#include "graphfair/reductions.h"

namespace graphfair::testing {

struct SimpleGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

namespace internal {

inline bool IsConnected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

// Smallest adjacency bitmask over all vertex relabelings.
inline std::uint32_t CanonicalForm(int n,
                                   const std::vector<std::pair<int, int>>& e) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t code = 0;
    for (auto [u, v] : e) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      code |= 1u << (a * n + b);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace internal

// Connected simple graphs with 1..max_vertices vertices and at most
// max_edges edges, one representative per isomorphism class.
inline std::vector<SimpleGraph> ConnectedGraphs(int max_vertices,
                                                int max_edges) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::uint32_t> seen;
    const int p = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      if (std::popcount(mask) > max_edges) continue;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < p; ++i) {
        if (mask & (1u << i)) edges.push_back(pairs[i]);
      }
      if (!internal::IsConnected(n, edges)) continue;
      if (!seen.insert(internal::CanonicalForm(n, edges)).second) continue;
      out.push_back({n, edges});
    }
  }
  return out;
}

// All 4^m {0,1} endpoint labelings of a graph.
inline void ForEachBinaryLabeling(
    const SimpleGraph& graph,
    const std::function<void(const GraphicalInstance&)>& f) {
  const int m = static_cast<int>(graph.edges.size());
  for (std::uint32_t code = 0; code < (1u << (2 * m)); ++code) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      edges.push_back({graph.edges[i].first, graph.edges[i].second,
                       (code >> (2 * i)) & 1, (code >> (2 * i + 1)) & 1});
    }
    f(GraphicalInstance(graph.num_vertices, std::move(edges)));
  }
}

// Seeded random instances with 2..max_agents agents whose search space in
// `mode` stays within `max_states`.
inline std::vector<GraphicalInstance> RandomInstances(
    std::uint64_t seed, int count, int max_agents,
    const std::vector<Utility>& values, SearchMode mode,
    std::uint64_t max_states, int max_items = 64) {
  std::mt19937_64 rng(seed);
  std::vector<GraphicalInstance> out;
  while (static_cast<int>(out.size()) < count) {
    RandomInstanceSpec spec;
    spec.num_agents = 2 + static_cast<int>(rng() % (max_agents - 1));
    spec.edge_probability = 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000;
    spec.values = values;
    spec.seed = rng();
    GraphicalInstance g = GenerateRandom(spec);
    if (g.num_items() > max_items) continue;
    if (StateCount(g, mode) > max_states) continue;
    out.push_back(std::move(g));
  }
  return out;
}

// Random d-regular graph on n vertices (pairing model with restarts) split
// into k non-empty classes. Returns std::nullopt if no simple pairing turns
// up.
inline std::optional<McisInstance> RandomRegularMcis(std::mt19937_64& rng,
                                                     int n, int d, int k) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u > v) std::swap(u, v);
      ok = u != v && edges.emplace(u, v).second;
    }
    if (!ok) continue;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<int>> classes(k);
    for (int i = 0; i < n; ++i) {
      classes[i < k ? i : rng() % k].push_back(order[i]);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    return McisInstance(std::move(classes), {edges.begin(), edges.end()});
  }
  return std::nullopt;
}

}  // namespace graphfair::testing

#endif  // GRAPHFAIR_TESTS_TESTING_CORPUS_H_
