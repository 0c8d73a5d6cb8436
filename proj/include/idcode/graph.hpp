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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idcode/types.hpp"

namespace idcode {

using Edge = std::pair<Vertex, Vertex>;

class ClosedNeighborhoodMatrix;
class NeighborhoodArray;
class Permutation;

/// Undirected simple graph on vertices 1..n.
///
/// The edge set is stored canonically (each edge as (u, v) with u < v, sorted).
/// The bit-matrix and sorted-list views are built on first use and shared
/// between copies; a Graph is immutable after construction and may be read
/// from any number of threads.
class Graph {
 public:
  /// Throws UsageError if n == 0, an endpoint is outside 1..n, an edge is a
  /// self-loop, or an edge occurs twice (in either orientation).
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Open neighbors of v, ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool adjacent(Vertex u, Vertex v) const;

  /// B = I + A, packed one row per vertex.
  const ClosedNeighborhoodMatrix& matrix() const;
  /// Closed neighborhoods as sorted lists.
  const NeighborhoodArray& neighborhood_array() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  struct Views;

  void check_vertex(Vertex v) const;

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t max_degree_ = 0;
  std::shared_ptr<Views> views_;
};

/// Rows of packed 64-bit words; row j (1-based) has bit i-1 set iff
/// v_i ∈ N(v_j). Symmetric with an all-ones diagonal.
class ClosedNeighborhoodMatrix {
 public:
  explicit ClosedNeighborhoodMatrix(const Graph& g);

  std::size_t n() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(Vertex j) const {
    return {bits_.data() + (j - 1) * words_, words_};
  }
  /// b_{i,j}.
  bool at(Vertex i, Vertex j) const {
    return (row(j)[(i - 1) / 64] >> ((i - 1) % 64)) & 1U;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Closed neighborhoods as strictly increasing lists; list v contains v.
class NeighborhoodArray {
 public:
  explicit NeighborhoodArray(const Graph& g);

  std::size_t n() const noexcept { return offsets_.size() - 1; }
  std::span<const Vertex> operator[](Vertex v) const {
    return {members_.data() + offsets_[v - 1], offsets_[v] - offsets_[v - 1]};
  }
  /// d_v = |N(v)| = degree(v) + 1.
  std::size_t size(Vertex v) const { return offsets_[v] - offsets_[v - 1]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> members_;
};

/// A bijection on 1..n, read as "old label u becomes new label p(u)".
class Permutation {
 public:
  /// `image[u-1]` is the new label of u. Throws UsageError unless it is a
  /// bijection on 1..image.size().
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);
  /// The relabeling that makes `order[0]` vertex 1, `order[1]` vertex 2, ...
  /// i.e. `order` lists the old vertices in the order they should be scanned.
  static Permutation from_order(std::span<const Vertex> order);

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex u) const { return image_[u - 1]; }
  Permutation inverse() const;
  std::span<const Vertex> image() const noexcept { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

/// N(v) = {v} ∪ neighbors(v), ascending. Throws UsageError when v is out of
/// range.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

/// The twin pair a lexicographic construction stops on: the smallest j that
/// has a twin k < j, paired with that k (unique, since two twins below j
/// would be twins of each other and stop the scan earlier). nullopt iff the
/// graph is twin-free.
std::optional<TwinFailure> find_twins(const Graph& g);

/// True iff every N(v) ∩ c is nonempty and the n intersections are pairwise
/// distinct. Throws UsageError if a member of `c` is out of range.
bool is_identifying_code(const Graph& g, const Code& c);

/// Relabels every vertex u as p(u).
Graph permute(const Graph& g, const Permutation& p);

/// Maps each member through `p`.
Code permute(const Code& c, const Permutation& p);

}  // namespace idcode
