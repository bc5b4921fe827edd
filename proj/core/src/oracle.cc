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

#include "graphfair/oracle.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

#include "graphfair/errors.h"

namespace graphfair {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingPow(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > kSaturated / base) return kSaturated;
    result *= base;
  }
  return result;
}

int Radix(const GraphicalInstance& instance, SearchMode mode) {
  return mode == SearchMode::kOrientations ? 2 : instance.num_agents();
}

void CheckBudget(const GraphicalInstance& instance, SearchMode mode,
                 std::uint64_t budget) {
  const std::uint64_t states = StateCount(instance, mode);
  if (states <= budget) return;
  const std::string count = states == kSaturated
                                ? std::string("more than 2^64")
                                : std::to_string(states);
  throw CapacityError("search space " + std::to_string(Radix(instance, mode)) +
                      "^" + std::to_string(instance.num_items()) + " = " +
                      count + " states exceeds budget " +
                      std::to_string(budget));
}

// Walks all owner vectors sharing a fixed prefix, in lexicographic order,
// keeping agent utilities up to date incrementally.
class Walker {
 public:
  Walker(const GraphicalInstance& instance, SearchMode mode)
      : instance_(instance),
        mode_(mode),
        radix_(Radix(instance, mode)),
        digits_(instance.num_items(), 0),
        owners_(instance.num_items(), 0),
        utilities_(instance.num_agents(), 0) {}

  template <typename Visit>
  bool Walk(std::uint64_t chunk, int prefix_length, Visit&& visit) {
    const int m = instance_.num_items();
    for (int item = prefix_length - 1; item >= 0; --item) {
      digits_[item] = static_cast<int>(chunk % radix_);
      chunk /= radix_;
    }
    std::fill(digits_.begin() + prefix_length, digits_.end(), 0);
    std::fill(utilities_.begin(), utilities_.end(), 0);
    for (int item = 0; item < m; ++item) Place(item);
    while (true) {
      if (!visit(std::span<const AgentId>(owners_),
                 std::span<const Utility>(utilities_))) {
        return false;
      }
      int item = m - 1;
      while (item >= prefix_length && digits_[item] == radix_ - 1) {
        Unplace(item);
        digits_[item] = 0;
        Place(item);
        --item;
      }
      if (item < prefix_length) return true;
      Unplace(item);
      ++digits_[item];
      Place(item);
    }
  }

 private:
  AgentId OwnerOf(int item) const {
    if (mode_ == SearchMode::kAllAllocations) return digits_[item];
    const Edge& e = instance_.edge(item);
    return digits_[item] == 0 ? e.LowEndpoint() : e.HighEndpoint();
  }
  void Place(int item) {
    owners_[item] = OwnerOf(item);
    utilities_[owners_[item]] += instance_.Value(owners_[item], item);
  }
  void Unplace(int item) {
    utilities_[owners_[item]] -= instance_.Value(owners_[item], item);
  }

  const GraphicalInstance& instance_;
  SearchMode mode_;
  int radix_;
  std::vector<int> digits_;
  std::vector<AgentId> owners_;
  std::vector<Utility> utilities_;
};

int PrefixLength(const GraphicalInstance& instance, SearchMode mode,
                 int workers) {
  if (workers <= 1) return 0;
  const std::uint64_t want = 4ull * static_cast<std::uint64_t>(workers);
  int p = 0;
  while (p < instance.num_items() &&
         SaturatingPow(Radix(instance, mode), p) < want) {
    ++p;
  }
  return p;
}

// Runs `process(chunk, walker, evaluator)` over every chunk, spreading chunks
// over worker threads. `skip(chunk)` lets callers drop chunks that can no
// longer affect the deterministic result.
template <typename Process, typename Skip>
void RunChunks(const GraphicalInstance& instance, const OracleOptions& options,
               std::uint64_t num_chunks, Process&& process, Skip&& skip) {
  const int workers = std::max(1, options.workers);
  std::atomic<std::uint64_t> next{0};
  auto body = [&] {
    Walker walker(instance, options.mode);
    FairnessEvaluator evaluator(instance);
    for (std::uint64_t chunk = next++; chunk < num_chunks; chunk = next++) {
      if (skip(chunk)) continue;
      process(chunk, walker, evaluator);
    }
  };
  if (workers == 1) {
    body();
    return;
  }
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back(body);
  for (std::thread& t : threads) t.join();
}

template <typename Predicate>
std::optional<std::vector<AgentId>> FindFirst(
    const GraphicalInstance& instance, const OracleOptions& options,
    Predicate&& predicate) {
  CheckBudget(instance, options.mode, options.budget);
  const int prefix = PrefixLength(instance, options.mode, options.workers);
  const std::uint64_t num_chunks =
      SaturatingPow(Radix(instance, options.mode), prefix);
  std::vector<std::optional<std::vector<AgentId>>> found(num_chunks);
  std::atomic<std::uint64_t> first_hit{num_chunks};
  RunChunks(
      instance, options, num_chunks,
      [&](std::uint64_t chunk, Walker& walker, FairnessEvaluator& evaluator) {
        walker.Walk(chunk, prefix,
                    [&](std::span<const AgentId> owners,
                        std::span<const Utility> utilities) {
                      if (!predicate(owners, utilities, evaluator)) return true;
                      found[chunk].emplace(owners.begin(), owners.end());
                      std::uint64_t seen = first_hit.load();
                      while (chunk < seen &&
                             !first_hit.compare_exchange_weak(seen, chunk)) {
                      }
                      return false;
                    });
      },
      [&](std::uint64_t chunk) { return chunk > first_hit.load(); });
  for (auto& hit : found) {
    if (hit) return std::move(hit);
  }
  return std::nullopt;
}

bool SatisfiesConstraint(FairnessConstraint constraint,
                         std::span<const AgentId> owners,
                         FairnessEvaluator& evaluator) {
  switch (constraint) {
    case FairnessConstraint::kNone:
      return true;
    case FairnessConstraint::kEnvyFree:
      return evaluator.EnvyFree(owners);
    case FairnessConstraint::kEfx:
      return evaluator.Efx(owners);
  }
  return false;
}

// Lexicographic objective. Utilitarian and egalitarian use `primary` only;
// Nash uses (positive support, product of positive utilities).
struct WelfareKey {
  std::int64_t primary = std::numeric_limits<std::int64_t>::min();
  std::uint64_t secondary = 0;

  friend auto operator<=>(const WelfareKey&, const WelfareKey&) = default;
};

WelfareKey KeyFor(WelfareKind welfare, std::span<const Utility> utilities) {
  WelfareKey key;
  switch (welfare) {
    case WelfareKind::kUtilitarian:
      key.primary = 0;
      for (Utility u : utilities) key.primary += u;
      break;
    case WelfareKind::kEgalitarian:
      key.primary = *std::min_element(utilities.begin(), utilities.end());
      break;
    case WelfareKind::kNash:
      key.primary = 0;
      key.secondary = 1;
      for (Utility u : utilities) {
        if (u <= 0) continue;
        ++key.primary;
        if (__builtin_mul_overflow(key.secondary,
                                   static_cast<std::uint64_t>(u),
                                   &key.secondary)) {
          throw CapacityError("Nash product overflows 64 bits");
        }
      }
      break;
  }
  return key;
}

BigInt ValueOf(WelfareKind welfare, const WelfareKey& key, int num_agents) {
  if (welfare != WelfareKind::kNash) return BigInt(key.primary);
  return key.primary == num_agents ? BigInt(key.secondary) : BigInt(0);
}

}  // namespace

std::uint64_t StateCount(const GraphicalInstance& instance, SearchMode mode) {
  return SaturatingPow(Radix(instance, mode), instance.num_items());
}

void ForEachAllocation(
    const GraphicalInstance& instance, SearchMode mode, std::uint64_t budget,
    const std::function<bool(std::span<const AgentId> owners)>& visit) {
  CheckBudget(instance, mode, budget);
  Walker walker(instance, mode);
  walker.Walk(0, 0, [&](std::span<const AgentId> owners,
                        std::span<const Utility>) { return visit(owners); });
}

std::optional<Allocation> ExistsFair(const GraphicalInstance& instance,
                                     Fairness fairness,
                                     const OracleOptions& options) {
  const FairnessConstraint constraint = fairness == Fairness::kEnvyFree
                                            ? FairnessConstraint::kEnvyFree
                                            : FairnessConstraint::kEfx;
  auto hit = FindFirst(instance, options,
                       [&](std::span<const AgentId> owners,
                           std::span<const Utility>,
                           FairnessEvaluator& evaluator) {
                         return SatisfiesConstraint(constraint, owners,
                                                    evaluator);
                       });
  if (!hit) return std::nullopt;
  return Allocation(std::move(*hit));
}

std::optional<WelfareOptimum> MaxWelfare(const GraphicalInstance& instance,
                                         WelfareKind welfare,
                                         FairnessConstraint constraint,
                                         const OracleOptions& options) {
  CheckBudget(instance, options.mode, options.budget);
  const int prefix = PrefixLength(instance, options.mode, options.workers);
  const std::uint64_t num_chunks =
      SaturatingPow(Radix(instance, options.mode), prefix);
  struct ChunkBest {
    bool found = false;
    WelfareKey key;
    std::vector<AgentId> witness;
  };
  std::vector<ChunkBest> best(num_chunks);
  RunChunks(
      instance, options, num_chunks,
      [&](std::uint64_t chunk, Walker& walker, FairnessEvaluator& evaluator) {
        ChunkBest& mine = best[chunk];
        walker.Walk(chunk, prefix,
                    [&](std::span<const AgentId> owners,
                        std::span<const Utility> utilities) {
                      const WelfareKey key = KeyFor(welfare, utilities);
                      if (mine.found && key <= mine.key) return true;
                      if (!SatisfiesConstraint(constraint, owners, evaluator)) {
                        return true;
                      }
                      mine.found = true;
                      mine.key = key;
                      mine.witness.assign(owners.begin(), owners.end());
                      return true;
                    });
      },
      [](std::uint64_t) { return false; });
  const ChunkBest* winner = nullptr;
  for (const ChunkBest& b : best) {
    if (b.found && (winner == nullptr || b.key > winner->key)) winner = &b;
  }
  if (winner == nullptr) return std::nullopt;
  return WelfareOptimum{ValueOf(welfare, winner->key, instance.num_agents()),
                        Allocation(winner->witness)};
}

std::string PofRatio::ToString() const {
  if (fair_set_empty) return "undefined";
  if (infinite()) return "inf";
  if (numerator == 0 && denominator == 0) return "1/1";
  const BigInt g = boost::multiprecision::gcd(numerator, denominator);
  return BigInt(numerator / g).str() + "/" + BigInt(denominator / g).str();
}

PofRatio PriceOfEfx(const GraphicalInstance& instance, WelfareKind welfare,
                    const OracleOptions& options) {
  PofRatio ratio;
  const auto all = MaxWelfare(instance, welfare, FairnessConstraint::kNone,
                              options);
  const auto fair = MaxWelfare(instance, welfare, FairnessConstraint::kEfx,
                               options);
  ratio.numerator = all->value;
  if (fair) {
    ratio.denominator = fair->value;
  } else {
    ratio.fair_set_empty = true;
  }
  return ratio;
}

Utility OptimalUtilitarianWelfare(const GraphicalInstance& instance) {
  Utility total = 0;
  for (const Edge& e : instance.edges()) total += e.MaxValue();
  return total;
}

bool DecideUmPlusEfx(const GraphicalInstance& instance,
                     const OracleOptions& options) {
  const Utility optimum = OptimalUtilitarianWelfare(instance);
  return FindFirst(instance, options,
                   [&](std::span<const AgentId> owners,
                       std::span<const Utility> utilities,
                       FairnessEvaluator& evaluator) {
                     Utility total = 0;
                     for (Utility u : utilities) total += u;
                     return total == optimum && evaluator.Efx(owners);
                   })
      .has_value();
}

bool DecideEmEfxThreshold(const GraphicalInstance& instance,
                          Utility threshold, const OracleOptions& options) {
  return FindFirst(instance, options,
                   [&](std::span<const AgentId> owners,
                       std::span<const Utility> utilities,
                       FairnessEvaluator& evaluator) {
                     for (Utility u : utilities) {
                       if (u < threshold) return false;
                     }
                     return evaluator.Efx(owners);
                   })
      .has_value();
}

}  // namespace graphfair
