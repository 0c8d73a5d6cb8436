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

#include "idcode/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "idcode/errors.hpp"

namespace idcode {
namespace {

// Every trace N(v) ∩ S nonempty and pairwise distinct.
bool identifies(std::span<const std::uint64_t> closed, std::uint64_t subset,
                std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (std::uint64_t nb : closed) {
    const std::uint64_t trace = nb & subset;
    if (trace == 0) return false;
    scratch.push_back(trace);
  }
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

}  // namespace

MinimumResult minimum_code(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.n();
  if (max_n > 64) throw UsageError("minimum_code supports at most 64 vertices");
  if (n > max_n) {
    throw UsageError("exhaustive search refused: n = " + std::to_string(n) +
                     " exceeds the cap of " + std::to_string(max_n));
  }
  if (auto twins = find_twins(g)) throw TwinError(*twins);

  std::vector<std::uint64_t> closed(n, 0);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex u : closed_neighborhood(g, v)) closed[v - 1] |= std::uint64_t{1} << (u - 1);
  }

  std::vector<std::uint64_t> scratch;
  scratch.reserve(n);
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= n; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      std::uint64_t subset = 0;
      for (std::size_t i : pick) subset |= std::uint64_t{1} << i;
      if (identifies(closed, subset, scratch)) {
        std::vector<Vertex> members;
        for (std::size_t i : pick) members.push_back(static_cast<Vertex>(i + 1));
        return {Code(std::move(members)), size};
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  // The full vertex set identifies every twin-free graph.
  throw Error("minimum_code: no identifying subset found");
}

Code minimalize(const Graph& g, const Code& c) {
  if (!is_identifying_code(g, c)) {
    throw UsageError("minimalize: the input is not an identifying code");
  }
  Code current = c;
  for (Vertex v : c) {
    Code candidate = current.without(v);
    if (is_identifying_code(g, candidate)) current = std::move(candidate);
  }
  return current;
}

RunOutcome greedy_code(const Graph& g) {
  if (auto twins = find_twins(g)) return *twins;

  const std::size_t n = g.n();
  const auto& a = g.neighborhood_array();

  // Vertices sharing a class have equal traces N(v) ∩ C; pairs inside a class
  // are the uncovered pair elements. Class `empty_class` holds the vertices
  // whose trace is still empty, i.e. the uncovered singletons.
  std::vector<std::size_t> class_of(n + 1, 0);
  std::vector<std::size_t> class_size{n};
  const std::size_t empty_class = 0;
  std::vector<std::size_t> hits(1, 0);
  std::vector<std::size_t> touched;
  std::vector<Vertex> code;

  auto covered = [&] {
    if (class_size[empty_class] != 0) return false;
    return std::all_of(class_size.begin(), class_size.end(),
                       [](std::size_t s) { return s <= 1; });
  };

  while (!covered()) {
    std::uint64_t best_gain = 0;
    Vertex best = 0;
    for (Vertex u = 1; u <= n; ++u) {
      touched.clear();
      for (Vertex v : a[u]) {
        if (hits[class_of[v]]++ == 0) touched.push_back(class_of[v]);
      }
      std::uint64_t gain = 0;
      for (std::size_t cls : touched) {
        const std::uint64_t in = hits[cls];
        gain += in * (class_size[cls] - in);
        if (cls == empty_class) gain += in;
        hits[cls] = 0;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    if (best == 0) throw Error("greedy_code: no progress on a twin-free graph");

    code.push_back(best);
    // Split every class touched by N(best): members inside N(best) move to a
    // fresh class, so `empty_class` keeps exactly the still-uncovered ones.
    std::vector<std::size_t> moved_to(class_size.size(), 0);
    for (Vertex v : a[best]) {
      const std::size_t cls = class_of[v];
      if (moved_to[cls] == 0) {
        moved_to[cls] = class_size.size();
        class_size.push_back(0);
        hits.push_back(0);
      }
      --class_size[cls];
      ++class_size[moved_to[cls]];
      class_of[v] = moved_to[cls];
    }
  }
  return Code(std::move(code));
}

}  // namespace idcode
