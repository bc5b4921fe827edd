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

#ifndef GRAPHFAIR_ORACLE_H_
#define GRAPHFAIR_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "graphfair/fairness.h"
#include "graphfair/instance.h"

namespace graphfair {

enum class Fairness { kEnvyFree, kEfx };
enum class FairnessConstraint { kNone, kEnvyFree, kEfx };
enum class WelfareKind { kUtilitarian, kEgalitarian, kNash };

// Which allocations an exhaustive search visits.
enum class SearchMode {
  kAllAllocations,  // n^m owner vectors
  kOrientations,    // 2^m endpoint choices
};

struct OracleOptions {
  SearchMode mode = SearchMode::kAllAllocations;
  std::uint64_t budget = 10'000'000;
  // Worker threads. Results are identical for every worker count.
  int workers = 1;
};

// Number of allocations in the search space, saturated at UINT64_MAX.
std::uint64_t StateCount(const GraphicalInstance& instance, SearchMode mode);

// Visits every allocation of the search space exactly once, in lexicographic
// owner-vector order (item 0 most significant; agents, or the lower endpoint
// first, ascending). Stops early when `visit` returns false. Throws
// CapacityError when the space exceeds `budget`.
void ForEachAllocation(
    const GraphicalInstance& instance, SearchMode mode, std::uint64_t budget,
    const std::function<bool(std::span<const AgentId> owners)>& visit);

// Lexicographically smallest allocation satisfying `fairness`, if any.
std::optional<Allocation> ExistsFair(const GraphicalInstance& instance,
                                     Fairness fairness,
                                     const OracleOptions& options = {});

struct WelfareOptimum {
  // Optimal welfare. For Nash this is the product of utilities, 0 when no
  // allocation gives every agent positive utility.
  BigInt value;
  // Lexicographically smallest allocation attaining the optimum. Nash
  // witnesses maximize (positive-support count, product over positive
  // utilities).
  Allocation witness;
};

// Exact optimum over the constrained search space; std::nullopt when no
// allocation satisfies the constraint.
std::optional<WelfareOptimum> MaxWelfare(const GraphicalInstance& instance,
                                         WelfareKind welfare,
                                         FairnessConstraint constraint,
                                         const OracleOptions& options = {});

// Unconstrained optimum over EFX optimum.
struct PofRatio {
  BigInt numerator;
  BigInt denominator;
  // No EFX allocation in the searched space.
  bool fair_set_empty = false;

  bool infinite() const {
    return !fair_set_empty && denominator == 0 && numerator > 0;
  }
  // "num/den" reduced to lowest terms, "inf" for an unbounded ratio, "1/1"
  // when both optima are 0.
  std::string ToString() const;
};

PofRatio PriceOfEfx(const GraphicalInstance& instance, WelfareKind welfare,
                    const OracleOptions& options = {});

// Utilitarian optimum: every item to an agent valuing it most.
Utility OptimalUtilitarianWelfare(const GraphicalInstance& instance);

// True iff some EFX allocation reaches the utilitarian optimum.
bool DecideUmPlusEfx(const GraphicalInstance& instance,
                     const OracleOptions& options = {});

// True iff some EFX allocation gives every agent at least `threshold`.
bool DecideEmEfxThreshold(const GraphicalInstance& instance,
                          Utility threshold,
                          const OracleOptions& options = {});

}  // namespace graphfair

#endif  // GRAPHFAIR_ORACLE_H_
