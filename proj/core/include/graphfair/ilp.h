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

#ifndef GRAPHFAIR_ILP_H_
#define GRAPHFAIR_ILP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphfair {

enum class ConstraintSense { kEqual, kGreaterEqual, kLessEqual };

// Which family of the EF model a row belongs to.
enum class ConstraintFamily {
  kTypeCoverage,       // every independent vertex uses one good pattern
  kEdgeOwnedOnce,      // each cover-cover edge goes to exactly one endpoint
  kAllCoverEdgesOwned, // total count of cover-cover assignments
  kCoverThreshold,     // cover agent reaches its v_max
  kGeneric,
};

struct LinearTerm {
  int variable = 0;
  std::int64_t coefficient = 0;
};

struct IlpVariable {
  std::string name;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

struct IlpConstraint {
  std::vector<LinearTerm> terms;
  ConstraintSense sense = ConstraintSense::kEqual;
  std::int64_t rhs = 0;
  ConstraintFamily family = ConstraintFamily::kGeneric;

  std::int64_t Activity(std::span<const std::int64_t> values) const;
  bool IsSatisfiedBy(std::span<const std::int64_t> values) const;
};

// Pure feasibility model: bounded integer variables and linear rows with
// integer coefficients. There is no objective.
class IlpModel {
 public:
  int AddVariable(std::string name, std::int64_t lower, std::int64_t upper);
  int AddConstraint(IlpConstraint constraint);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<IlpVariable>& variables() const { return variables_; }
  const std::vector<IlpConstraint>& constraints() const { return constraints_; }

  bool IsSatisfiedBy(std::span<const std::int64_t> values) const;

 private:
  std::vector<IlpVariable> variables_;
  std::vector<IlpConstraint> constraints_;
};

struct IlpSearchStats {
  std::int64_t nodes = 0;
};

// Exact integer feasibility by depth-first branching over variable domains
// with interval bound propagation at every node. Variables are branched in
// index order, values tried from upper bound down. Returns the first
// satisfying assignment in that order, or std::nullopt when none exists.
std::optional<std::vector<std::int64_t>> FindFeasibleAssignment(
    const IlpModel& model, IlpSearchStats* stats = nullptr);

}  // namespace graphfair

#endif  // GRAPHFAIR_ILP_H_
