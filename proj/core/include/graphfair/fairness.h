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

#ifndef GRAPHFAIR_FAIRNESS_H_
#define GRAPHFAIR_FAIRNESS_H_

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphfair/instance.h"

namespace graphfair {

using BigInt = boost::multiprecision::cpp_int;

struct WelfareReport {
  Utility utilitarian = 0;
  Utility egalitarian = 0;
  // Exact product of all agent utilities.
  BigInt nash_product = 0;
  int nash_positive_support = 0;
};

// Additive utility of `agent` for the given items. Throws InputError on any
// out-of-range index.
Utility BundleUtility(const GraphicalInstance& instance, AgentId agent,
                      std::span<const ItemId> bundle);

// Utility of every agent for its own bundle. Requires a complete allocation.
std::vector<Utility> AgentUtilities(const GraphicalInstance& instance,
                                    const Allocation& allocation);

bool IsEnvyFree(const GraphicalInstance& instance,
                const Allocation& allocation);

// Envy towards j must vanish after removing *any* item of j's bundle,
// including items the envious agent values at zero.
bool IsEfx(const GraphicalInstance& instance, const Allocation& allocation);

// Every item is owned by one of its endpoints.
bool IsOrientation(const GraphicalInstance& instance,
                   const Allocation& allocation);

// Every item is owned by an agent valuing it positively. Items valued 0 by
// both endpoints are non-wasteful wherever they go.
bool IsNonWasteful(const GraphicalInstance& instance,
                   const Allocation& allocation);

WelfareReport Welfare(const GraphicalInstance& instance,
                      const Allocation& allocation);

// Reusable evaluator for hot loops over raw owner vectors. Performs no
// validation; callers guarantee a complete, in-range owner vector.
class FairnessEvaluator {
 public:
  explicit FairnessEvaluator(const GraphicalInstance& instance);

  void Utilities(std::span<const AgentId> owners, std::span<Utility> out) const;
  bool EnvyFree(std::span<const AgentId> owners);
  bool Efx(std::span<const AgentId> owners);

 private:
  const GraphicalInstance& instance_;
  std::vector<Utility> own_;
  std::vector<int> bundle_size_;
  // Per-agent scratch, indexed by the owner of an incident item.
  std::vector<Utility> seen_sum_;
  std::vector<Utility> seen_min_;
  std::vector<int> seen_count_;
};

}  // namespace graphfair

#endif  // GRAPHFAIR_FAIRNESS_H_
