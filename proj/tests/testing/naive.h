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

#ifndef GRAPHFAIR_TESTS_TESTING_NAIVE_H_
#define GRAPHFAIR_TESTS_TESTING_NAIVE_H_

// Literal, deliberately slow restatements of the fairness and welfare
// definitions. Used as the independent reference in tests; nothing here
// calls into the library beyond reading edges.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "graphfair/instance.h"

namespace graphfair::testing {

using Owners = std::vector<AgentId>;
using OwnerView = std::span<const AgentId>;

inline std::int64_t NaiveValue(const GraphicalInstance& g, AgentId agent,
                               ItemId item) {
  const Edge& e = g.edges()[item];
  if (e.a == agent) return e.value_a;
  if (e.b == agent) return e.value_b;
  return 0;
}

inline std::vector<std::vector<ItemId>> NaiveBundles(const GraphicalInstance& g,
                                                     OwnerView owners) {
  std::vector<std::vector<ItemId>> bundles(g.num_agents());
  for (ItemId item = 0; item < static_cast<ItemId>(owners.size()); ++item) {
    bundles[owners[item]].push_back(item);
  }
  return bundles;
}

inline std::int64_t NaiveBundleValue(const GraphicalInstance& g, AgentId agent,
                                     const std::vector<ItemId>& bundle,
                                     ItemId skip = -1) {
  std::int64_t total = 0;
  for (ItemId item : bundle) {
    if (item != skip) total += NaiveValue(g, agent, item);
  }
  return total;
}

inline bool NaiveEnvyFree(const GraphicalInstance& g, OwnerView owners) {
  const auto bundles = NaiveBundles(g, owners);
  for (AgentId i = 0; i < g.num_agents(); ++i) {
    for (AgentId j = 0; j < g.num_agents(); ++j) {
      if (NaiveBundleValue(g, i, bundles[i]) <
          NaiveBundleValue(g, i, bundles[j])) {
        return false;
      }
    }
  }
  return true;
}

inline bool NaiveEfx(const GraphicalInstance& g, OwnerView owners) {
  const auto bundles = NaiveBundles(g, owners);
  for (AgentId i = 0; i < g.num_agents(); ++i) {
    const std::int64_t own = NaiveBundleValue(g, i, bundles[i]);
    for (AgentId j = 0; j < g.num_agents(); ++j) {
      if (i == j) continue;
      for (ItemId removed : bundles[j]) {
        if (own < NaiveBundleValue(g, i, bundles[j], removed)) return false;
      }
    }
  }
  return true;
}

inline bool NaiveNonWasteful(const GraphicalInstance& g, OwnerView owners) {
  for (ItemId item = 0; item < static_cast<ItemId>(owners.size()); ++item) {
    const Edge& e = g.edges()[item];
    if (e.value_a == 0 && e.value_b == 0) continue;
    if (NaiveValue(g, owners[item], item) == 0) return false;
  }
  return true;
}

inline bool NaiveOrientation(const GraphicalInstance& g, OwnerView owners) {
  for (ItemId item = 0; item < static_cast<ItemId>(owners.size()); ++item) {
    const Edge& e = g.edges()[item];
    if (owners[item] != e.a && owners[item] != e.b) return false;
  }
  return true;
}

inline std::vector<std::int64_t> NaiveUtilities(const GraphicalInstance& g,
                                                OwnerView owners) {
  const auto bundles = NaiveBundles(g, owners);
  std::vector<std::int64_t> u(g.num_agents());
  for (AgentId i = 0; i < g.num_agents(); ++i) {
    u[i] = NaiveBundleValue(g, i, bundles[i]);
  }
  return u;
}

// Every owner vector in base num_agents, counting up.
inline void NaiveForEachAllocation(const GraphicalInstance& g,
                                   const std::function<void(const Owners&)>& f) {
  const int m = g.num_items();
  const int n = g.num_agents();
  Owners owners(m, 0);
  while (true) {
    f(owners);
    int pos = m - 1;
    while (pos >= 0 && owners[pos] == n - 1) owners[pos--] = 0;
    if (pos < 0) return;
    ++owners[pos];
  }
}

// Every orientation, via an m-bit mask (bit set: item goes to edge.b).
inline void NaiveForEachOrientation(
    const GraphicalInstance& g, const std::function<void(const Owners&)>& f) {
  const int m = g.num_items();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Owners owners(m);
    for (int item = 0; item < m; ++item) {
      const Edge& e = g.edges()[item];
      owners[item] = (mask >> item) & 1 ? e.b : e.a;
    }
    f(owners);
  }
}

inline bool NaiveExistsEfOrientation(const GraphicalInstance& g) {
  bool found = false;
  NaiveForEachOrientation(g, [&](const Owners& o) {
    found = found || NaiveEnvyFree(g, o);
  });
  return found;
}

inline bool NaiveExistsEfAllocation(const GraphicalInstance& g) {
  bool found = false;
  NaiveForEachAllocation(g, [&](const Owners& o) {
    found = found || NaiveEnvyFree(g, o);
  });
  return found;
}

struct NaiveOptima {
  std::int64_t utilitarian = std::numeric_limits<std::int64_t>::min();
  std::int64_t egalitarian = std::numeric_limits<std::int64_t>::min();
  // Max product over all agents (0 included), as a double-free integer.
  std::uint64_t nash = 0;
  bool any = false;
};

// Optima over all allocations satisfying `keep`.
inline NaiveOptima NaiveOptimaOver(
    const GraphicalInstance& g,
    const std::function<bool(const Owners&)>& keep) {
  NaiveOptima best;
  NaiveForEachAllocation(g, [&](const Owners& o) {
    if (!keep(o)) return;
    const auto u = NaiveUtilities(g, o);
    std::int64_t sum = 0;
    std::uint64_t product = 1;
    for (auto x : u) {
      sum += x;
      product *= static_cast<std::uint64_t>(x);
    }
    best.any = true;
    best.utilitarian = std::max(best.utilitarian, sum);
    best.egalitarian =
        std::max(best.egalitarian, *std::min_element(u.begin(), u.end()));
    best.nash = std::max(best.nash, product);
  });
  return best;
}

}  // namespace graphfair::testing

#endif  // GRAPHFAIR_TESTS_TESTING_NAIVE_H_
