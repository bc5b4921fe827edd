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

#ifndef GRAPHFAIR_REDUCTIONS_H_
#define GRAPHFAIR_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphfair/instance.h"

namespace graphfair {

// Multi-colored independent set instance: a d-regular simple graph whose
// vertices are partitioned into non-empty color classes. Vertex ids are
// 0..num_vertices()-1. The constructor validates and throws InputError.
class McisInstance {
 public:
  McisInstance(std::vector<std::vector<int>> classes,
               std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree() const { return degree_; }
  bool Adjacent(int u, int v) const;
  int ClassOf(int v) const { return class_of_.at(v); }

  friend bool operator==(const McisInstance& x, const McisInstance& y) {
    return x.classes_ == y.classes_ && x.edges_ == y.edges_;
  }

 private:
  int num_vertices_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> classes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> class_of_;
  std::vector<std::vector<char>> adjacent_;
};

// Agent layout of the reduced instances: original vertices keep their ids.
//
// EF gadget (also used for the egalitarian threshold): agent |V|+i is the
// hub w_i of class i. Items: the original edges (symmetric 1) in input order,
// then for each class i and each v in class i in order, the edge (v, w_i)
// with symmetric value d.
//
// UM+EFX gadget: class i appends path agents w_i^1..w_i^4 as |V|+4i+0..3.
// Items: the original edges (symmetric 1), then per class i the path edges
// (w_i^1,w_i^2) valued (0,1), (w_i^2,w_i^3) valued (d,d), (w_i^3,w_i^4)
// valued (d,0), followed by (v, w_i^2) valued (d,d) for each v in class i.
inline int EfHubAgent(const McisInstance& mcis, int class_index) {
  return mcis.num_vertices() + class_index;
}
inline int UmEfxPathAgent(const McisInstance& mcis, int class_index,
                          int position /* 1..4 */) {
  return mcis.num_vertices() + 4 * class_index + (position - 1);
}

// Requires degree >= 1.
GraphicalInstance ReduceMcisToEf(const McisInstance& mcis);

enum class UmEfxGadget {
  // (w_i^2, w_i^3) valued d by both endpoints. With this tie a
  // utilitarian-optimal allocation may hand the edge to w_i^2, which then
  // needs no edge from V_i, so EFX+UM allocations can exist on no-instances.
  kPublished,
  // w_i^3 values (w_i^2, w_i^3) at d + 1, so utilitarian optimality forces
  // the edge to w_i^3. Uses values {0, 1, d, d + 1}.
  kStrictMiddleEdge,
};

// Requires degree >= 2.
GraphicalInstance ReduceMcisToUmEfx(
    const McisInstance& mcis, UmEfxGadget gadget = UmEfxGadget::kPublished);

struct EgalitarianEfxInstance {
  GraphicalInstance instance;
  Utility threshold = 0;
};

// The EF gadget paired with threshold d. Requires degree >= 1.
EgalitarianEfxInstance ReduceMcisToEmEfx(const McisInstance& mcis);

// First colorful independent set in lexicographic order of per-class
// choices, or std::nullopt. Throws CapacityError when the product of class
// sizes exceeds `budget`.
std::optional<std::vector<int>> SolveMcisBruteForce(
    const McisInstance& mcis, std::uint64_t budget = 10'000'000);

// True iff `vertices` holds exactly one vertex per class, pairwise
// non-adjacent.
bool IsColorfulIndependentSet(const McisInstance& mcis,
                              const std::vector<int>& vertices);

// Reads a colorful independent set off an EF allocation of the EF gadget:
// per class, the lowest vertex that did not take its d-valued hub edge yet
// still reaches utility d. Returns std::nullopt if the recovered set is not
// a colorful independent set. Throws PreconditionError if `allocation` is
// not envy-free on ReduceMcisToEf(mcis).
std::optional<std::vector<int>> ExtractIndependentSet(
    const McisInstance& mcis, const Allocation& allocation);

}  // namespace graphfair

#endif  // GRAPHFAIR_REDUCTIONS_H_
