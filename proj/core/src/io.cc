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

#include "graphfair/io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "graphfair/errors.h"

namespace graphfair {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (const std::size_t hash = raw.find('#'); hash != raw.npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() &&
             (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) {
        ++pos;
      }
      std::size_t stop = pos;
      while (stop < raw.size() && raw[stop] != ' ' && raw[stop] != '\t' &&
             raw[stop] != '\r') {
        ++stop;
      }
      if (stop > pos) line.tokens.push_back(raw.substr(pos, stop - pos));
      pos = stop;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::int64_t ToInt(const Line& line, std::size_t index) {
  const std::string_view token = line.tokens[index];
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Fail(line.number, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

void Expect(const Line& line, std::string_view keyword, std::size_t arity,
            std::string_view usage) {
  if (line.tokens[0] != keyword || line.tokens.size() != arity) {
    Fail(line.number, "expected '" + std::string(usage) + "'");
  }
}

void ExpectHeader(const std::vector<Line>& lines, std::string_view kind,
                  int line_hint) {
  if (lines.empty()) Fail(line_hint, "missing '" + std::string(kind) + " 1' header");
  const Line& h = lines.front();
  Expect(h, kind, 2, std::string(kind) + " 1");
  if (ToInt(h, 1) != 1) {
    Fail(h.number, "unsupported " + std::string(kind) + " format version " +
                       std::string(h.tokens[1]));
  }
}

int ToIndex(const Line& line, std::size_t index, std::int64_t limit,
            std::string_view what) {
  const std::int64_t value = ToInt(line, index);
  if (value < 0 || value >= limit) {
    Fail(line.number, std::string(what) + " " + std::to_string(value) +
                          " out of range [0, " + std::to_string(limit) + ")");
  }
  return static_cast<int>(value);
}

}  // namespace

std::string FormatInstance(const GraphicalInstance& instance) {
  std::ostringstream out;
  out << "graphical 1\nagents " << instance.num_agents() << "\n";
  for (const Edge& e : instance.edges()) {
    out << "edge " << e.a << " " << e.b << " " << e.value_a << " "
        << e.value_b << "\n";
  }
  return out.str();
}

GraphicalInstance ParseInstance(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  ExpectHeader(lines, "graphical", 1);
  if (lines.size() < 2) Fail(lines[0].number + 1, "expected 'agents <n>'");
  const Line& agents_line = lines[1];
  Expect(agents_line, "agents", 2, "agents <n>");
  const std::int64_t n = ToInt(agents_line, 1);
  if (n < 1 || n > (1 << 30)) {
    Fail(agents_line.number, "agent count must be positive");
  }
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    Expect(line, "edge", 5, "edge <a> <b> <value_a> <value_b>");
    Edge e;
    e.a = ToIndex(line, 1, n, "agent");
    e.b = ToIndex(line, 2, n, "agent");
    e.value_a = ToInt(line, 3);
    e.value_b = ToInt(line, 4);
    if (e.a == e.b) Fail(line.number, "self-loop on agent " + std::to_string(e.a));
    if (e.value_a < 0 || e.value_b < 0) {
      Fail(line.number, "utilities must be nonnegative");
    }
    if (!pairs.emplace(e.LowEndpoint(), e.HighEndpoint()).second) {
      Fail(line.number, "duplicate edge between agents " +
                            std::to_string(e.LowEndpoint()) + " and " +
                            std::to_string(e.HighEndpoint()));
    }
    edges.push_back(e);
  }
  return GraphicalInstance(static_cast<int>(n), std::move(edges));
}

std::string FormatAllocation(const Allocation& allocation) {
  std::ostringstream out;
  out << "allocation 1\n";
  for (ItemId item = 0; item < allocation.num_items(); ++item) {
    out << "assign " << item << " " << allocation.owner(item) << "\n";
  }
  return out.str();
}

Allocation ParseAllocation(std::string_view text,
                           const GraphicalInstance& instance) {
  const std::vector<Line> lines = Tokenize(text);
  ExpectHeader(lines, "allocation", 1);
  Allocation allocation = Allocation::Unassigned(instance.num_items());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    Expect(line, "assign", 3, "assign <item_index> <agent_index>");
    const int item = ToIndex(line, 1, instance.num_items(), "item");
    const int agent = ToIndex(line, 2, instance.num_agents(), "agent");
    if (allocation.owner(item) != kUnassigned) {
      Fail(line.number, "item " + std::to_string(item) + " assigned twice");
    }
    allocation.Assign(item, agent);
  }
  for (ItemId item = 0; item < instance.num_items(); ++item) {
    if (allocation.owner(item) == kUnassigned) {
      Fail(lines.back().number,
           "allocation ends without assigning item " + std::to_string(item));
    }
  }
  return allocation;
}

std::string FormatMcis(const McisInstance& mcis) {
  std::ostringstream out;
  out << "mcis 1\nclasses " << mcis.num_classes() << "\n";
  for (int i = 0; i < mcis.num_classes(); ++i) {
    out << "class " << i;
    for (int v : mcis.classes()[i]) out << " " << v;
    out << "\n";
  }
  for (const auto& [u, v] : mcis.edges()) {
    out << "edge " << u << " " << v << "\n";
  }
  return out.str();
}

McisInstance ParseMcis(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  ExpectHeader(lines, "mcis", 1);
  if (lines.size() < 2) Fail(lines[0].number + 1, "expected 'classes <k>'");
  Expect(lines[1], "classes", 2, "classes <k>");
  const std::int64_t k = ToInt(lines[1], 1);
  if (k < 1 || static_cast<std::size_t>(k) > lines.size()) {
    Fail(lines[1].number, "class count must be positive and match the file");
  }
  std::vector<std::vector<int>> classes;
  std::size_t i = 2;
  for (std::int64_t c = 0; c < k; ++c, ++i) {
    if (i >= lines.size()) Fail(lines.back().number, "missing class lines");
    const Line& line = lines[i];
    if (line.tokens[0] != "class" || line.tokens.size() < 3) {
      Fail(line.number, "expected 'class <i> <v1> <v2> ...'");
    }
    if (ToInt(line, 1) != c) {
      Fail(line.number, "expected class " + std::to_string(c));
    }
    std::vector<int> members;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const std::int64_t v = ToInt(line, t);
      if (v < 0 || v > (1 << 30)) Fail(line.number, "vertex out of range");
      members.push_back(static_cast<int>(v));
    }
    classes.push_back(std::move(members));
  }
  std::vector<std::pair<int, int>> edges;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    Expect(line, "edge", 3, "edge <u> <v>");
    const std::int64_t u = ToInt(line, 1);
    const std::int64_t v = ToInt(line, 2);
    if (u < 0 || v < 0 || u > (1 << 30) || v > (1 << 30)) {
      Fail(line.number, "vertex out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return McisInstance(std::move(classes), std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("mcis: ") + e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace graphfair
