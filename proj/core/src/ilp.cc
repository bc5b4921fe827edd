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

#include "graphfair/ilp.h"

#include <algorithm>
#include <utility>

#include "graphfair/errors.h"

namespace graphfair {
namespace {

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

struct Domain {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

// Tightens bounds implied by sum(sign * a_j x_j) >= sign * rhs. Returns false
// on proven infeasibility; sets *changed when a bound moved.
bool PropagateAtLeast(const IlpConstraint& c, std::int64_t sign, Domain& d,
                      bool* changed) {
  std::int64_t max_activity = 0;
  for (const LinearTerm& t : c.terms) {
    const std::int64_t a = sign * t.coefficient;
    max_activity += a > 0 ? a * d.upper[t.variable] : a * d.lower[t.variable];
  }
  const std::int64_t rhs = sign * c.rhs;
  if (max_activity < rhs) return false;
  for (const LinearTerm& t : c.terms) {
    const std::int64_t a = sign * t.coefficient;
    const int v = t.variable;
    if (a > 0) {
      const std::int64_t rest = max_activity - a * d.upper[v];
      const std::int64_t bound = CeilDiv(rhs - rest, a);
      if (bound > d.lower[v]) {
        d.lower[v] = bound;
        *changed = true;
      }
    } else if (a < 0) {
      const std::int64_t rest = max_activity - a * d.lower[v];
      const std::int64_t bound = FloorDiv(rhs - rest, a);
      if (bound < d.upper[v]) {
        d.upper[v] = bound;
        *changed = true;
      }
    }
    if (d.lower[v] > d.upper[v]) return false;
  }
  return true;
}

bool Propagate(const IlpModel& model, Domain& d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const IlpConstraint& c : model.constraints()) {
      if (c.sense != ConstraintSense::kLessEqual &&
          !PropagateAtLeast(c, 1, d, &changed)) {
        return false;
      }
      if (c.sense != ConstraintSense::kGreaterEqual &&
          !PropagateAtLeast(c, -1, d, &changed)) {
        return false;
      }
    }
  }
  return true;
}

bool Search(const IlpModel& model, Domain d, IlpSearchStats& stats,
            std::vector<std::int64_t>& out) {
  ++stats.nodes;
  if (!Propagate(model, d)) return false;
  int branch = -1;
  for (int v = 0; v < model.num_variables(); ++v) {
    if (d.lower[v] < d.upper[v]) {
      branch = v;
      break;
    }
  }
  if (branch < 0) {
    if (!model.IsSatisfiedBy(d.lower)) return false;
    out = d.lower;
    return true;
  }
  for (std::int64_t value = d.upper[branch]; value >= d.lower[branch];
       --value) {
    Domain child = d;
    child.lower[branch] = child.upper[branch] = value;
    if (Search(model, std::move(child), stats, out)) return true;
  }
  return false;
}

}  // namespace

std::int64_t IlpConstraint::Activity(
    std::span<const std::int64_t> values) const {
  std::int64_t total = 0;
  for (const LinearTerm& t : terms) total += t.coefficient * values[t.variable];
  return total;
}

bool IlpConstraint::IsSatisfiedBy(std::span<const std::int64_t> values) const {
  const std::int64_t lhs = Activity(values);
  switch (sense) {
    case ConstraintSense::kEqual:
      return lhs == rhs;
    case ConstraintSense::kGreaterEqual:
      return lhs >= rhs;
    case ConstraintSense::kLessEqual:
      return lhs <= rhs;
  }
  return false;
}

int IlpModel::AddVariable(std::string name, std::int64_t lower,
                          std::int64_t upper) {
  variables_.push_back({std::move(name), lower, upper});
  return num_variables() - 1;
}

int IlpModel::AddConstraint(IlpConstraint constraint) {
  for (const LinearTerm& t : constraint.terms) {
    if (t.variable < 0 || t.variable >= num_variables()) {
      throw InputError("constraint references unknown variable " +
                       std::to_string(t.variable));
    }
  }
  constraints_.push_back(std::move(constraint));
  return num_constraints() - 1;
}

bool IlpModel::IsSatisfiedBy(std::span<const std::int64_t> values) const {
  if (static_cast<int>(values.size()) != num_variables()) return false;
  for (int v = 0; v < num_variables(); ++v) {
    if (values[v] < variables_[v].lower || values[v] > variables_[v].upper) {
      return false;
    }
  }
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const IlpConstraint& c) {
                       return c.IsSatisfiedBy(values);
                     });
}

std::optional<std::vector<std::int64_t>> FindFeasibleAssignment(
    const IlpModel& model, IlpSearchStats* stats) {
  Domain root;
  for (const IlpVariable& v : model.variables()) {
    if (v.lower > v.upper) return std::nullopt;
    root.lower.push_back(v.lower);
    root.upper.push_back(v.upper);
  }
  IlpSearchStats local;
  std::vector<std::int64_t> out;
  const bool found = Search(model, std::move(root), local, out);
  if (stats != nullptr) *stats = local;
  if (!found) return std::nullopt;
  return out;
}

}  // namespace graphfair
