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

#ifndef GRAPHFAIR_VERTEX_COVER_H_
#define GRAPHFAIR_VERTEX_COVER_H_

#include <vector>

#include "graphfair/instance.h"

namespace graphfair {

// A vertex cover S together with the independent set I = V \ S.
struct VertexCoverDecomposition {
  std::vector<AgentId> cover;        // ascending
  std::vector<AgentId> independent;  // ascending

  int k() const { return static_cast<int>(cover.size()); }
};

// Exact minimum vertex cover by iterative deepening over the bounded search
// tree: branch on the lowest-indexed uncovered edge, lower endpoint first.
// The first cover found at the smallest size is returned.
VertexCoverDecomposition MinVertexCover(const GraphicalInstance& instance);

// True iff cover and independent partition the agents and every edge has an
// endpoint in the cover.
bool IsValidDecomposition(const GraphicalInstance& instance,
                          const VertexCoverDecomposition& decomposition);

}  // namespace graphfair

#endif  // GRAPHFAIR_VERTEX_COVER_H_
