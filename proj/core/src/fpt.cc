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

#include "graphfair/fpt.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "graphfair/errors.h"
#include "graphfair/fairness.h"

namespace graphfair {
namespace {

constexpr int kMaxPatternDegree = 30;

int CoverPosition(const VertexCoverDecomposition& d, AgentId v) {
  const auto it = std::lower_bound(d.cover.begin(), d.cover.end(), v);
  return (it != d.cover.end() && *it == v)
             ? static_cast<int>(it - d.cover.begin())
             : -1;
}

}  // namespace

std::vector<TypeClass> ClassifyTypes(
    const GraphicalInstance& instance,
    const VertexCoverDecomposition& decomposition) {
  if (!IsValidDecomposition(instance, decomposition)) {
    throw InputError("invalid vertex cover decomposition");
  }
  using Key = std::tuple<std::vector<AgentId>, std::vector<Utility>,
                         std::vector<Utility>>;
  std::map<Key, int> index;
  std::vector<TypeClass> types;
  for (AgentId v : decomposition.independent) {
    std::vector<std::pair<AgentId, ItemId>> neighbours;
    for (ItemId item : instance.IncidentItems(v)) {
      neighbours.emplace_back(instance.edge(item).Other(v), item);
    }
    std::sort(neighbours.begin(), neighbours.end());
    TypeClass t;
    for (const auto& [s, item] : neighbours) {
      t.neighborhood.push_back(s);
      t.signature.push_back(instance.Value(v, item));
      t.cover_values.push_back(instance.Value(s, item));
    }
    Key key{t.neighborhood, t.signature, t.cover_values};
    auto [it, inserted] = index.emplace(std::move(key), types.size());
    if (inserted) types.push_back(std::move(t));
    types[it->second].members.push_back(v);
  }
  return types;
}

std::vector<OrientationPattern> GoodOrientations(
    const GraphicalInstance& /*instance*/,
    const VertexCoverDecomposition& decomposition, const TypeClass& type,
    GoodPatternRule rule) {
  const int degree = type.degree();
  if (degree > kMaxPatternDegree) {
    throw CapacityError("type degree " + std::to_string(degree) +
                        " exceeds pattern limit " +
                        std::to_string(kMaxPatternDegree));
  }
  const Utility v_max =
      type.signature.empty()
          ? 0
          : *std::max_element(type.signature.begin(), type.signature.end());
  std::vector<OrientationPattern> good;
  for (std::uint32_t mask = 0; mask < (1u << degree); ++mask) {
    OrientationPattern p;
    p.toward_member = mask;
    p.cover_utility.assign(decomposition.k(), 0);
    bool has_top_edge = false;
    for (int j = 0; j < degree; ++j) {
      if (mask & (1u << j)) {
        p.member_utility += type.signature[j];
        has_top_edge |= type.signature[j] == v_max;
      } else {
        p.cover_utility[CoverPosition(decomposition, type.neighborhood[j])] +=
            type.cover_values[j];
      }
    }
    const bool is_good = rule == GoodPatternRule::kVMaxThreshold
                             ? p.member_utility >= v_max
                             : (v_max == 0 || has_top_edge);
    if (is_good) good.push_back(std::move(p));
  }
  auto total = [](const OrientationPattern& p) {
    return std::accumulate(p.cover_utility.begin(), p.cover_utility.end(),
                           Utility{0});
  };
  std::stable_sort(good.begin(), good.end(),
                   [&](const OrientationPattern& x,
                       const OrientationPattern& y) {
                     return total(x) > total(y);
                   });
  return good;
}

EfIlp BuildEfIlp(const GraphicalInstance& instance,
                 const VertexCoverDecomposition& decomposition,
                 std::span<const TypeClass> types, GoodPatternRule rule) {
  EfIlp ilp;
  const int k = decomposition.k();
  std::vector<IlpConstraint> thresholds(k);
  for (int pos = 0; pos < k; ++pos) {
    thresholds[pos].sense = ConstraintSense::kGreaterEqual;
    thresholds[pos].rhs = instance.VMax(decomposition.cover[pos]);
    thresholds[pos].family = ConstraintFamily::kCoverThreshold;
  }

  for (int t = 0; t < static_cast<int>(types.size()); ++t) {
    ilp.patterns.push_back(
        GoodOrientations(instance, decomposition, types[t], rule));
    IlpConstraint coverage;
    coverage.sense = ConstraintSense::kEqual;
    coverage.rhs = types[t].size();
    coverage.family = ConstraintFamily::kTypeCoverage;
    for (int o = 0; o < static_cast<int>(ilp.patterns[t].size()); ++o) {
      const int var = ilp.model.AddVariable(
          "x(T" + std::to_string(t) + ",o" +
              std::to_string(ilp.patterns[t][o].toward_member) + ")",
          0, types[t].size());
      ilp.counts.push_back({t, o, var});
      coverage.terms.push_back({var, 1});
      for (int pos = 0; pos < k; ++pos) {
        const Utility u = ilp.patterns[t][o].cover_utility[pos];
        if (u != 0) thresholds[pos].terms.push_back({var, u});
      }
    }
    ilp.model.AddConstraint(std::move(coverage));
  }

  std::vector<char> in_cover(instance.num_agents(), 0);
  for (AgentId s : decomposition.cover) in_cover[s] = 1;
  IlpConstraint all_owned;
  all_owned.sense = ConstraintSense::kEqual;
  all_owned.family = ConstraintFamily::kAllCoverEdgesOwned;
  for (ItemId item = 0; item < instance.num_items(); ++item) {
    const Edge& e = instance.edge(item);
    if (!in_cover[e.a] || !in_cover[e.b]) continue;
    ilp.cover_edges.push_back(item);
    IlpConstraint once;
    once.sense = ConstraintSense::kEqual;
    once.rhs = 1;
    once.family = ConstraintFamily::kEdgeOwnedOnce;
    for (AgentId agent : {e.LowEndpoint(), e.HighEndpoint()}) {
      const int var = ilp.model.AddVariable(
          "x_{" + std::to_string(agent) + ",e" + std::to_string(item) + "}",
          0, 1);
      ilp.edge_choices.push_back({agent, item, var});
      once.terms.push_back({var, 1});
      all_owned.terms.push_back({var, 1});
      const Utility u = e.ValueFor(agent);
      if (u != 0) {
        thresholds[CoverPosition(decomposition, agent)].terms.push_back(
            {var, u});
      }
    }
    ilp.model.AddConstraint(std::move(once));
  }
  all_owned.rhs = static_cast<std::int64_t>(ilp.cover_edges.size());
  ilp.model.AddConstraint(std::move(all_owned));

  for (int pos = 0; pos < k; ++pos) {
    ilp.threshold_rows.push_back(
        ilp.model.AddConstraint(std::move(thresholds[pos])));
  }
  return ilp;
}

Allocation LiftAssignment(const GraphicalInstance& instance,
                          const VertexCoverDecomposition& /*decomposition*/,
                          std::span<const TypeClass> types, const EfIlp& ilp,
                          std::span<const std::int64_t> assignment) {
  Allocation allocation = Allocation::Unassigned(instance.num_items());
  std::vector<int> next_member(types.size(), 0);
  for (const EfIlp::CountVariable& c : ilp.counts) {
    const TypeClass& type = types[c.type];
    const OrientationPattern& pattern = ilp.patterns[c.type][c.pattern];
    for (std::int64_t copy = 0; copy < assignment[c.variable]; ++copy) {
      const AgentId v = type.members.at(next_member[c.type]++);
      for (int j = 0; j < type.degree(); ++j) {
        const ItemId item = instance.FindItem(v, type.neighborhood[j]);
        allocation.Assign(item, (pattern.toward_member & (1u << j))
                                    ? v
                                    : type.neighborhood[j]);
      }
    }
  }
  for (const EfIlp::EdgeVariable& e : ilp.edge_choices) {
    if (assignment[e.variable] == 1) allocation.Assign(e.item, e.agent);
  }
  if (!allocation.IsComplete()) {
    throw std::logic_error("ILP assignment left items unassigned");
  }
  return allocation;
}

std::optional<Allocation> SolveEfFpt(const GraphicalInstance& instance,
                                     const FptOptions& options) {
  const int distinct = static_cast<int>(instance.DistinctUtilities().size());
  if (distinct > options.max_distinct_utilities) {
    throw InputError("instance has " + std::to_string(distinct) +
                     " distinct utilities; the FPT solver cap is " +
                     std::to_string(options.max_distinct_utilities));
  }
  const VertexCoverDecomposition decomposition = MinVertexCover(instance);
  const std::vector<TypeClass> types = ClassifyTypes(instance, decomposition);
  const EfIlp ilp = BuildEfIlp(instance, decomposition, types, options.rule);
  const auto assignment = FindFeasibleAssignment(ilp.model);
  if (!assignment) return std::nullopt;
  Allocation allocation =
      LiftAssignment(instance, decomposition, types, ilp, *assignment);
  if (!IsEnvyFree(instance, allocation)) {
    throw std::logic_error("lifted orientation is not envy-free");
  }
  return allocation;
}

}  // namespace graphfair
