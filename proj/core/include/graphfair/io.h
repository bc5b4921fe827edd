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

#ifndef GRAPHFAIR_IO_H_
#define GRAPHFAIR_IO_H_

#include <string>
#include <string_view>

#include "graphfair/instance.h"
#include "graphfair/reductions.h"

namespace graphfair {

// Line-based text formats. `#` starts a comment running to end of line; blank
// lines are ignored. Parse errors are InputError messages of the form
// "line N: ...".
//
//   graphical 1            allocation 1            mcis 1
//   agents <n>             assign <item> <agent>   classes <k>
//   edge <a> <b> <va> <vb>                         class <i> <v1> <v2> ...
//                                                  edge <u> <v>
//
// Format* emits the canonical form (no comments, one space between fields,
// trailing newline), and Parse(Format(x)) == x.

std::string FormatInstance(const GraphicalInstance& instance);
GraphicalInstance ParseInstance(std::string_view text);

std::string FormatAllocation(const Allocation& allocation);
// Validates against `instance`: every item assigned exactly once to an
// in-range agent.
Allocation ParseAllocation(std::string_view text,
                           const GraphicalInstance& instance);

std::string FormatMcis(const McisInstance& mcis);
McisInstance ParseMcis(std::string_view text);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace graphfair

#endif  // GRAPHFAIR_IO_H_
