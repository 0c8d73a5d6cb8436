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

#include "idcode/generators.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "idcode/errors.hpp"

namespace idcode {

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Draws in [2^64 mod bound, 2^64) span a whole number of residues.
  const std::uint64_t reject_from = -bound % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= reject_from) return x % bound;
  }
}

void shuffle(std::span<Vertex> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw UsageError("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  edges.emplace_back(Vertex{1}, static_cast<Vertex>(n));
  return Graph(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw UsageError("grid needs r, c >= 1");
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<Vertex>(r * cols + c + 1);
  };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, edges);
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw UsageError("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("gnp needs 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (uniform_unit(rng) < p) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph(n, edges);
}

Graph hypercube_graph(std::size_t k) {
  if (k > 24) throw UsageError("hypercube dimension must be at most 24");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) edges.emplace_back(static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1));
    }
  }
  return Graph(n, edges);
}

namespace {

std::size_t as_size(double value, std::string_view what) {
  if (!(value >= 0) || value != std::floor(value) || value > 1e9) {
    throw UsageError(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(value);
}

void expect_params(std::span<const double> params, std::size_t count,
                   std::string_view family) {
  if (params.size() != count) {
    throw UsageError(std::string(family) + " takes " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

Graph generate(std::string_view family, std::span<const double> params,
               std::uint64_t seed) {
  if (family == "path") {
    expect_params(params, 1, family);
    return path_graph(as_size(params[0], "n"));
  }
  if (family == "cycle") {
    expect_params(params, 1, family);
    return cycle_graph(as_size(params[0], "n"));
  }
  if (family == "grid") {
    expect_params(params, 2, family);
    return grid_graph(as_size(params[0], "r"), as_size(params[1], "c"));
  }
  if (family == "gnp") {
    expect_params(params, 2, family);
    return gnp_graph(as_size(params[0], "n"), params[1], seed);
  }
  if (family == "hypercube") {
    expect_params(params, 1, family);
    return hypercube_graph(as_size(params[0], "k"));
  }
  throw UsageError("unknown graph family '" + std::string(family) + "'");
}

Graph nonminimal_fixture() {
  constexpr std::array<std::array<Vertex, 3>, 3> labels{{
      {1, 2, 9},
      {4, 3, 8},
      {6, 7, 5},
  }};
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (c + 1 < 3) edges.emplace_back(labels[r][c], labels[r][c + 1]);
      if (r + 1 < 3) edges.emplace_back(labels[r][c], labels[r + 1][c]);
    }
  }
  return Graph(9, edges);
}

}  // namespace idcode
