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

#ifndef GRAPHFAIR_GENERATORS_H_
#define GRAPHFAIR_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "graphfair/instance.h"

namespace graphfair {

// Star with center 0 and leaves 1..d. Item i-1 joins the center to leaf i;
// the center values every item at d, each leaf its own item at 1.
GraphicalInstance GenerateStar(int d);

struct RandomInstanceSpec {
  int num_agents = 1;
  double edge_probability = 0.5;
  std::vector<Utility> values = {0, 1};
  std::uint64_t seed = 0;
};

// Erdos-Renyi instance. Generator contract, stable across platforms: a
// std::mt19937_64 seeded with `seed` visits pairs (a, b), a < b, in
// lexicographic order. Each pair draws r = (next() >> 11) * 2^-53 and becomes
// an edge iff r < edge_probability; an edge then draws value_a and value_b as
// values[next() % values.size()], in that order.
GraphicalInstance GenerateRandom(const RandomInstanceSpec& spec);

}  // namespace graphfair

#endif  // GRAPHFAIR_GENERATORS_H_
