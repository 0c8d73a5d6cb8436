// Copyright 2026 The idcode Authors
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

#include "idcode/graph_io.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "idcode/errors.hpp"

namespace idcode {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Non-empty lines, tokenized, with 1-based line numbers.
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
  }
  return out;
}

std::size_t to_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

// Validates edges as they arrive so errors carry the line they came from.
class EdgeCollector {
 public:
  EdgeCollector(std::size_t n, std::size_t m, std::size_t header_line)
      : n_(n), m_(m) {
    if (n == 0) throw ParseError(header_line, "a graph needs at least one vertex");
    if (n > std::numeric_limits<Vertex>::max() - 1) {
      throw ParseError(header_line, "too many vertices");
    }
  }

  void add(std::string_view su, std::string_view sv, std::size_t line) {
    const std::size_t u = to_count(su, line);
    const std::size_t v = to_count(sv, line);
    if (u < 1 || u > n_ || v < 1 || v > n_) {
      throw ParseError(line, "endpoint outside 1.." + std::to_string(n_));
    }
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
    if (edges_.size() == m_) {
      throw ParseError(line, "more edges than the declared " + std::to_string(m_));
    }
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen_.insert(e).second) {
      throw ParseError(line, "duplicate edge " + std::to_string(e.first) + "-" +
                                 std::to_string(e.second));
    }
    edges_.push_back(e);
  }

  Graph finish() const {
    if (edges_.size() != m_) {
      throw ParseError(0, "declared " + std::to_string(m_) + " edges, found " +
                              std::to_string(edges_.size()));
    }
    return Graph(n_, edges_);
  }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Edge> edges_;
  std::set<Edge> seen_;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<EdgeCollector> edges;
  for (const auto& line : lines_of(text)) {
    if (line.tokens.front().front() == '#') continue;
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected two integers");
    }
    if (!edges) {
      edges.emplace(to_count(line.tokens[0], line.number),
                    to_count(line.tokens[1], line.number), line.number);
    } else {
      edges->add(line.tokens[0], line.tokens[1], line.number);
    }
  }
  if (!edges) throw ParseError(0, "missing \"n m\" header line");
  return edges->finish();
}

Graph parse_dimacs(std::string_view text) {
  std::optional<EdgeCollector> edges;
  for (const auto& line : lines_of(text)) {
    const auto& t = line.tokens;
    if (t[0] == "c") continue;
    if (t[0] == "p") {
      if (edges) throw ParseError(line.number, "second problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
        throw ParseError(line.number, "expected \"p edge n m\"");
      }
      edges.emplace(to_count(t[2], line.number), to_count(t[3], line.number),
                    line.number);
    } else if (t[0] == "e") {
      if (!edges) throw ParseError(line.number, "edge line before the problem line");
      if (t.size() != 3) throw ParseError(line.number, "expected \"e u v\"");
      edges->add(t[1], t[2], line.number);
    } else {
      throw ParseError(line.number, "unknown line type '" + std::string(t[0]) + "'");
    }
  }
  if (!edges) throw ParseError(0, "missing \"p edge n m\" problem line");
  return edges->finish();
}

Graph parse_graph(std::string_view text) {
  for (const auto& line : lines_of(text)) {
    const auto first = line.tokens.front();
    if (first.front() == '#') continue;
    if (first == "p" || first == "c" || first == "e") return parse_dimacs(text);
    break;
  }
  return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace idcode
