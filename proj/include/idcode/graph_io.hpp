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

#pragma once

#include <string>
#include <string_view>

#include "idcode/graph.hpp"

namespace idcode {

/// Edge-list text: a header line "n m", then m lines "u v". Blank lines and
/// lines starting with '#' are ignored; LF or CRLF line endings.
///
/// Throws ParseError (with the offending line number) on malformed lines,
/// self-loops, duplicate edges, out-of-range endpoints and count mismatches.
Graph parse_edge_list(std::string_view text);

/// DIMACS text: "c" comment lines, one "p edge n m" problem line, then m
/// "e u v" lines. Same validation as parse_edge_list.
Graph parse_dimacs(std::string_view text);

/// DIMACS if the first meaningful line starts with "p" or "c", edge list
/// otherwise.
Graph parse_graph(std::string_view text);

/// Canonical edge list: header, then edges with u < v in ascending order.
std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

}  // namespace idcode
