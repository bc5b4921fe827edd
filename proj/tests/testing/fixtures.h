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

#ifndef GRAPHFAIR_TESTS_TESTING_FIXTURES_H_
#define GRAPHFAIR_TESTS_TESTING_FIXTURES_H_

#include "graphfair/instance.h"
#include "graphfair/reductions.h"

namespace graphfair::testing {

// Center 0 values each of its three edges at 3; leaves value theirs at 1.
inline GraphicalInstance Star3() {
  return GraphicalInstance(4, {{0, 1, 3, 1}, {0, 2, 3, 1}, {0, 3, 3, 1}});
}

// 0 - 1 - 2, symmetric unit values. Item 0 = (0,1), item 1 = (1,2).
inline GraphicalInstance Path3() {
  return GraphicalInstance(3, {{0, 1, 1, 1}, {1, 2, 1, 1}});
}

// Items (0,1), (1,2), (2,0), symmetric unit values.
inline GraphicalInstance Triangle() {
  return GraphicalInstance(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 0, 1, 1}});
}

inline Allocation TriangleCyclic() { return Allocation({0, 1, 2}); }

inline GraphicalInstance SingleSymmetricEdge() {
  return GraphicalInstance(2, {{0, 1, 1, 1}});
}

// Agent 0 values the item at 1, agent 1 at 0.
inline GraphicalInstance SingleAsymmetricEdge() {
  return GraphicalInstance(2, {{0, 1, 1, 0}});
}

// Cycle 0-1-2-3-0: items (0,1), (1,2), (2,3), (3,0).
inline GraphicalInstance C4() {
  return GraphicalInstance(
      4, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}, {3, 0, 1, 1}});
}

// K4 with symmetric unit values. Items: (0,1), (1,2), (2,0), (0,3), (1,3),
// (2,3).
inline GraphicalInstance K4() {
  return GraphicalInstance(4, {{0, 1, 1, 1},
                               {1, 2, 1, 1},
                               {2, 0, 1, 1},
                               {0, 3, 1, 1},
                               {1, 3, 1, 1},
                               {2, 3, 1, 1}});
}

// Envy-free allocation of K4 in which item (2,3) sits with agent 0, a
// non-endpoint.
inline Allocation K4WastefulEnvyFree() { return Allocation({0, 1, 2, 3, 3, 0}); }

// MCIS yes-instance: 4-cycle 0-1-2-3-0 with classes {0,1} and {2,3}. The
// colorful independent sets are {0,2} and {1,3}.
inline McisInstance McisC4() {
  return McisInstance({{0, 1}, {2, 3}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// MCIS no-instance: K_{2,2} whose sides are exactly the two classes, so every
// colorful pair is an edge.
inline McisInstance McisK22() {
  return McisInstance({{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace graphfair::testing

#endif  // GRAPHFAIR_TESTS_TESTING_FIXTURES_H_
