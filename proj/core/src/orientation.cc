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

#include "graphfair/orientation.h"

#include "graphfair/errors.h"
#include "graphfair/fairness.h"

namespace graphfair {

Allocation ToOrientation(const GraphicalInstance& instance,
                         const Allocation& allocation) {
  if (!IsEnvyFree(instance, allocation)) {
    throw PreconditionError(
        "ToOrientation requires an envy-free allocation");
  }
  Allocation result = allocation;
  for (ItemId item = 0; item < instance.num_items(); ++item) {
    const Edge& e = instance.edge(item);
    if (!e.IsIncident(result.owner(item))) {
      result.Assign(item, e.LowEndpoint());
    }
  }
  return result;
}

bool EnvyFreeViaVMax(const GraphicalInstance& instance,
                     const Allocation& allocation) {
  if (!IsNonWasteful(instance, allocation)) {
    throw PreconditionError("EnvyFreeViaVMax requires a non-wasteful "
                            "allocation");
  }
  const std::vector<Utility> utilities = AgentUtilities(instance, allocation);
  for (AgentId i = 0; i < instance.num_agents(); ++i) {
    if (utilities[i] < instance.VMax(i)) return false;
  }
  return true;
}

}  // namespace graphfair
