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

#ifndef GRAPHFAIR_ORIENTATION_H_
#define GRAPHFAIR_ORIENTATION_H_

#include "graphfair/instance.h"

namespace graphfair {

// Turns an envy-free allocation into an envy-free orientation. Every item held
// by a non-endpoint moves to its lowest-indexed endpoint; items already held
// by an endpoint stay put, so no agent's own utility decreases.
//
// Throws PreconditionError if `allocation` is not envy-free.
Allocation ToOrientation(const GraphicalInstance& instance,
                         const Allocation& allocation);

// Envy-freeness test for non-wasteful allocations: every agent must hold at
// least its largest single-item value. Throws PreconditionError when the
// allocation is wasteful.
bool EnvyFreeViaVMax(const GraphicalInstance& instance,
                     const Allocation& allocation);

}  // namespace graphfair

#endif  // GRAPHFAIR_ORIENTATION_H_
