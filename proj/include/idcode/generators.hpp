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

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "idcode/graph.hpp"

namespace idcode {

/// Every random choice in the library draws from std::mt19937_64, whose
/// output sequence is fixed by the C++ standard. Derived values use only the
/// helpers below (never the implementation-defined std distributions), so a
/// seed reproduces the same graphs and orderings on every platform.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);
/// Uniform integer in [0, bound) by rejection sampling; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Fisher-Yates, last position first: for i = size-1 down to 1, swap
/// element i with element uniform_below(i + 1).
void shuffle(std::span<Vertex> values, Rng& rng);

/// 1-2-...-n.
Graph path_graph(std::size_t n);
/// Path plus the edge n-1; n >= 3.
Graph cycle_graph(std::size_t n);
/// r×c grid, vertices numbered row-major from 1.
Graph grid_graph(std::size_t rows, std::size_t cols);
/// G(n, p): pairs (u, v), u < v, visited in lexicographic order; each draws
/// one uniform_unit() and becomes an edge iff the draw is < p.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);
/// Q_k on 2^k vertices; u and v adjacent iff (u-1) xor (v-1) is a power of 2.
Graph hypercube_graph(std::size_t k);

/// Dispatch by family name: "path" {n}, "cycle" {n}, "grid" {r, c},
/// "gnp" {n, p}, "hypercube" {k}. Throws UsageError on an unknown family or
/// bad parameters. `seed` only matters for gnp.
Graph generate(std::string_view family, std::span<const double> params,
               std::uint64_t seed);

/// The 3×3 grid with the vertex labels used for the non-minimal-output
/// example (row-major positions carry labels 1 2 9 / 4 3 8 / 6 7 5).
Graph nonminimal_fixture();

}  // namespace idcode
