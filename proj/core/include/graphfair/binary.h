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

#ifndef GRAPHFAIR_BINARY_H_
#define GRAPHFAIR_BINARY_H_

#include <optional>

#include "graphfair/instance.h"

namespace graphfair {

// Polynomial-time EF orientation for {0,1}-valued instances.
//
// Asymmetric edges go to their 1-valuer and 0/0 edges to their lowest-indexed
// endpoint. The symmetric 1/1 subgraph is split into connected components:
//  * a tree component needs a "special" vertex (one whose utility already
//    reaches its v_max); it is rooted there and every other vertex takes the
//    edge from its parent. Without one no EF allocation exists.
//  * a component with a cycle orients that cycle cyclically, then hangs the
//    rest of the component off it as a BFS spanning forest; leftover edges
//    go to their lowest-indexed endpoint.
//
// Returns std::nullopt when no EF allocation exists. Throws InputError on
// non-binary utilities.
std::optional<Allocation> SolveEfBinary(const GraphicalInstance& instance);

// Non-wasteful EFX allocation for {0,1}-valued instances; always succeeds.
//
// Same skeleton as SolveEfBinary, except a tree with no special vertex is
// rooted at its minimum-degree vertex, which ends up the only envious agent
// of that tree. Components where every vertex is satisfied are then
// rebalanced by flipping paths from richer to poorer agents, which makes the
// result maximize egalitarian and Nash welfare along with utilitarian
// welfare. 0/0 edges go last, to agents nobody envies.
Allocation SolveEfxBinary(const GraphicalInstance& instance);

}  // namespace graphfair

#endif  // GRAPHFAIR_BINARY_H_
