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

#include <cstddef>

#include "idcode/graph.hpp"
#include "idcode/types.hpp"

namespace idcode {

struct MinimumResult {
  Code code;
  /// i(G).
  std::size_t cardinality = 0;
};

/// Largest n `minimum_code` accepts unless told otherwise.
inline constexpr std::size_t kDefaultMinimumCodeCap = 24;

/// Exhaustive minimum identifying code. Subsets are tried by increasing size
/// and, within a size, in lexicographic order; the first identifying one is
/// returned, so the witness is reproducible.
///
/// Throws TwinError if the graph has twins and UsageError if n exceeds
/// `max_n` (which itself may not exceed 64).
MinimumResult minimum_code(const Graph& g,
                           std::size_t max_n = kDefaultMinimumCodeCap);

/// Tries to delete members in increasing index order, keeping each deletion
/// that leaves an identifying code. The result is minimal. Throws UsageError
/// if `c` is not identifying.
Code minimalize(const Graph& g, const Code& c);

/// Set-cover greedy. The universe holds one element per vertex (covered by
/// any codeword in N(v)) and one per unordered pair {v, w} (covered by any
/// codeword in N(v) Δ N(w)). Each round picks the vertex covering the most
/// uncovered elements, smallest index on ties.
RunOutcome greedy_code(const Graph& g);

}  // namespace idcode
