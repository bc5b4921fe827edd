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

#ifndef GRAPHFAIR_FPT_H_
#define GRAPHFAIR_FPT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphfair/ilp.h"
#include "graphfair/instance.h"
#include "graphfair/vertex_cover.h"

namespace graphfair {

// Independent-set vertices that see the same cover neighbours with the same
// utilities on both ends of every edge. Members are interchangeable in any
// orientation.
struct TypeClass {
  std::vector<AgentId> neighborhood;  // ascending subset of the cover
  // Value the member assigns to its edge toward neighborhood[j].
  std::vector<Utility> signature;
  // Value neighborhood[j] assigns to that same edge.
  std::vector<Utility> cover_values;
  std::vector<AgentId> members;  // ascending

  int size() const { return static_cast<int>(members.size()); }
  int degree() const { return static_cast<int>(neighborhood.size()); }
};

// One way to orient a type member's incident edges.
struct OrientationPattern {
  // Bit j set: the edge toward neighborhood[j] goes to the member.
  std::uint32_t toward_member = 0;
  Utility member_utility = 0;
  // Utility each cover agent collects from one member oriented this way,
  // indexed by position in VertexCoverDecomposition::cover.
  std::vector<Utility> cover_utility;
};

enum class GoodPatternRule {
  // Member's oriented utility reaches its v_max.
  kVMaxThreshold,
  // At least one of the member's highest-valued edges points to it (or the
  // member values nothing).
  kHighestEdge,
};

// Partitions decomposition.independent into types, in order of first
// appearance. Throws InputError on an invalid decomposition.
std::vector<TypeClass> ClassifyTypes(
    const GraphicalInstance& instance,
    const VertexCoverDecomposition& decomposition);

// Good patterns for a type, ordered by descending total cover utility then
// ascending mask.
std::vector<OrientationPattern> GoodOrientations(
    const GraphicalInstance& instance,
    const VertexCoverDecomposition& decomposition, const TypeClass& type,
    GoodPatternRule rule = GoodPatternRule::kVMaxThreshold);

// The feasibility model for an EF orientation plus the bookkeeping needed to
// read a solution back.
struct EfIlp {
  struct CountVariable {
    int type = 0;
    int pattern = 0;
    int variable = 0;
  };
  struct EdgeVariable {
    AgentId agent = 0;
    ItemId item = 0;
    int variable = 0;
  };

  IlpModel model;
  std::vector<std::vector<OrientationPattern>> patterns;  // per type
  std::vector<CountVariable> counts;
  std::vector<EdgeVariable> edge_choices;
  std::vector<ItemId> cover_edges;      // items with both ends in the cover
  std::vector<int> threshold_rows;      // per cover position
};

// Builds the model: per type, pattern counts sum to the type size; per
// cover-cover edge exactly one endpoint takes it; the total of those choices
// equals the number of cover-cover edges; every cover agent collects at least
// its v_max. Edge choice variables exist only for the two endpoints.
EfIlp BuildEfIlp(const GraphicalInstance& instance,
                 const VertexCoverDecomposition& decomposition,
                 std::span<const TypeClass> types,
                 GoodPatternRule rule = GoodPatternRule::kVMaxThreshold);

// Converts a feasible assignment into an orientation: pattern counts are
// dealt to type members in index order.
Allocation LiftAssignment(const GraphicalInstance& instance,
                          const VertexCoverDecomposition& decomposition,
                          std::span<const TypeClass> types, const EfIlp& ilp,
                          std::span<const std::int64_t> assignment);

struct FptOptions {
  int max_distinct_utilities = 8;
  GoodPatternRule rule = GoodPatternRule::kVMaxThreshold;
};

// EF orientation via vertex-cover decomposition and integer feasibility.
// Throws InputError if the instance has more distinct utilities (0 included)
// than options.max_distinct_utilities.
std::optional<Allocation> SolveEfFpt(const GraphicalInstance& instance,
                                     const FptOptions& options = {});

}  // namespace graphfair

#endif  // GRAPHFAIR_FPT_H_
