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

#include "graphfair/fairness.h"

#include <algorithm>
#include <limits>
#include <string>

#include "graphfair/errors.h"

namespace graphfair {
namespace {

void CheckAgent(const GraphicalInstance& instance, AgentId agent) {
  if (agent < 0 || agent >= instance.num_agents()) {
    throw InputError("agent " + std::to_string(agent) + " out of range [0, " +
                     std::to_string(instance.num_agents()) + ")");
  }
}

void CheckComplete(const GraphicalInstance& instance,
                   const Allocation& allocation) {
  if (allocation.num_items() != instance.num_items()) {
    throw InputError("allocation covers " +
                     std::to_string(allocation.num_items()) +
                     " items, instance has " +
                     std::to_string(instance.num_items()));
  }
  for (ItemId item = 0; item < allocation.num_items(); ++item) {
    const AgentId owner = allocation.owner(item);
    if (owner == kUnassigned) {
      throw InputError("allocation is incomplete: item " +
                       std::to_string(item) + " has no owner");
    }
    if (owner < 0 || owner >= instance.num_agents()) {
      throw InputError("item " + std::to_string(item) + " owned by agent " +
                       std::to_string(owner) + " out of range");
    }
  }
}

constexpr Utility kNoMin = std::numeric_limits<Utility>::max();

}  // namespace

Utility BundleUtility(const GraphicalInstance& instance, AgentId agent,
                      std::span<const ItemId> bundle) {
  CheckAgent(instance, agent);
  Utility total = 0;
  for (ItemId item : bundle) {
    if (item < 0 || item >= instance.num_items()) {
      throw InputError("item " + std::to_string(item) + " out of range [0, " +
                       std::to_string(instance.num_items()) + ")");
    }
    total += instance.Value(agent, item);
  }
  return total;
}

std::vector<Utility> AgentUtilities(const GraphicalInstance& instance,
                                    const Allocation& allocation) {
  CheckComplete(instance, allocation);
  std::vector<Utility> out(instance.num_agents(), 0);
  FairnessEvaluator(instance).Utilities(allocation.owners(), out);
  return out;
}

bool IsEnvyFree(const GraphicalInstance& instance,
                const Allocation& allocation) {
  CheckComplete(instance, allocation);
  return FairnessEvaluator(instance).EnvyFree(allocation.owners());
}

bool IsEfx(const GraphicalInstance& instance, const Allocation& allocation) {
  CheckComplete(instance, allocation);
  return FairnessEvaluator(instance).Efx(allocation.owners());
}

bool IsOrientation(const GraphicalInstance& instance,
                   const Allocation& allocation) {
  CheckComplete(instance, allocation);
  for (ItemId item = 0; item < instance.num_items(); ++item) {
    if (!instance.edge(item).IsIncident(allocation.owner(item))) return false;
  }
  return true;
}

bool IsNonWasteful(const GraphicalInstance& instance,
                   const Allocation& allocation) {
  CheckComplete(instance, allocation);
  for (ItemId item = 0; item < instance.num_items(); ++item) {
    const Edge& e = instance.edge(item);
    if (e.MaxValue() == 0) continue;
    if (e.ValueFor(allocation.owner(item)) == 0) return false;
  }
  return true;
}

WelfareReport Welfare(const GraphicalInstance& instance,
                      const Allocation& allocation) {
  const std::vector<Utility> utilities = AgentUtilities(instance, allocation);
  WelfareReport report;
  report.egalitarian = *std::min_element(utilities.begin(), utilities.end());
  report.nash_product = 1;
  for (Utility u : utilities) {
    report.utilitarian += u;
    report.nash_product *= u;
    if (u > 0) ++report.nash_positive_support;
  }
  return report;
}

FairnessEvaluator::FairnessEvaluator(const GraphicalInstance& instance)
    : instance_(instance),
      own_(instance.num_agents(), 0),
      bundle_size_(instance.num_agents(), 0),
      seen_sum_(instance.num_agents(), 0),
      seen_min_(instance.num_agents(), kNoMin),
      seen_count_(instance.num_agents(), 0) {}

void FairnessEvaluator::Utilities(std::span<const AgentId> owners,
                                  std::span<Utility> out) const {
  std::fill(out.begin(), out.end(), 0);
  const auto edges = instance_.edges();
  for (std::size_t item = 0; item < owners.size(); ++item) {
    out[owners[item]] += edges[item].ValueFor(owners[item]);
  }
}

bool FairnessEvaluator::EnvyFree(std::span<const AgentId> owners) {
  Utilities(owners, own_);
  const auto edges = instance_.edges();
  for (AgentId i = 0; i < instance_.num_agents(); ++i) {
    const auto incident = instance_.IncidentItems(i);
    for (ItemId item : incident) {
      const AgentId j = owners[item];
      if (j != i) seen_sum_[j] += edges[item].ValueFor(i);
    }
    bool ok = true;
    for (ItemId item : incident) {
      const AgentId j = owners[item];
      if (j == i) continue;
      if (seen_sum_[j] > own_[i]) ok = false;
      seen_sum_[j] = 0;
    }
    if (!ok) return false;
  }
  return true;
}

bool FairnessEvaluator::Efx(std::span<const AgentId> owners) {
  Utilities(owners, own_);
  std::fill(bundle_size_.begin(), bundle_size_.end(), 0);
  for (AgentId owner : owners) ++bundle_size_[owner];
  const auto edges = instance_.edges();
  for (AgentId i = 0; i < instance_.num_agents(); ++i) {
    const auto incident = instance_.IncidentItems(i);
    for (ItemId item : incident) {
      const AgentId j = owners[item];
      if (j == i) continue;
      const Utility v = edges[item].ValueFor(i);
      seen_sum_[j] += v;
      if (v > 0) {
        ++seen_count_[j];
        seen_min_[j] = std::min(seen_min_[j], v);
      }
    }
    bool ok = true;
    for (ItemId item : incident) {
      const AgentId j = owners[item];
      if (j == i || seen_min_[j] == kNoMin) {
        if (j != i) seen_sum_[j] = 0;
        continue;
      }
      // The cheapest removable item is a zero-valued one whenever j holds
      // anything i does not value.
      const Utility cheapest =
          bundle_size_[j] > seen_count_[j] ? 0 : seen_min_[j];
      if (seen_sum_[j] - cheapest > own_[i]) ok = false;
      seen_sum_[j] = 0;
      seen_count_[j] = 0;
      seen_min_[j] = kNoMin;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace graphfair
