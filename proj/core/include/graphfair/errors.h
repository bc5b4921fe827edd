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

#ifndef GRAPHFAIR_ERRORS_H_
#define GRAPHFAIR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace graphfair {

// Malformed or out-of-range input: bad indices, incomplete allocations,
// non-binary utilities handed to a binary solver, parse failures.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The input is well formed but violates an operation's precondition, e.g. a
// non-envy-free allocation passed to the orientation transform.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::logic_error(what) {}
};

// An exhaustive search would exceed its configured state budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace graphfair

#endif  // GRAPHFAIR_ERRORS_H_
