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

#include "idcode/graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "idcode/errors.hpp"

namespace idcode {

struct Graph::Views {
  std::once_flag matrix_once;
  std::unique_ptr<const ClosedNeighborhoodMatrix> matrix;
  std::once_flag array_once;
  std::unique_ptr<const NeighborhoodArray> array;
};

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), views_(std::make_shared<Views>()) {
  if (n == 0) throw UsageError("a graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw UsageError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw UsageError("duplicate edge " + std::to_string(dup->first) + "-" +
                     std::to_string(dup->second));
  }

  std::vector<std::size_t> degree(n + 1, 0);
  for (auto [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) offsets_[v] = offsets_[v - 1] + degree[v];
  max_degree_ = *std::max_element(degree.begin() + 1, degree.end());

  // Edges are sorted by (u, v), so filling in that order leaves every list
  // ascending: lower neighbors arrive via the second endpoint first.
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  std::vector<std::vector<Vertex>> lower(n + 1);
  for (auto [u, v] : edges_) lower[v].push_back(u);
  for (std::size_t v = 1; v <= n; ++v) {
    for (Vertex u : lower[v]) adjacency_[fill[v - 1]++] = u;
  }
  for (auto [u, v] : edges_) adjacency_[fill[u - 1]++] = v;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw UsageError("vertex " + std::to_string(v) + " is outside 1.." +
                     std::to_string(n_));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v - 1], offsets_[v] - offsets_[v - 1]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const ClosedNeighborhoodMatrix& Graph::matrix() const {
  std::call_once(views_->matrix_once, [this] {
    views_->matrix = std::make_unique<const ClosedNeighborhoodMatrix>(*this);
  });
  return *views_->matrix;
}

const NeighborhoodArray& Graph::neighborhood_array() const {
  std::call_once(views_->array_once, [this] {
    views_->array = std::make_unique<const NeighborhoodArray>(*this);
  });
  return *views_->array;
}

ClosedNeighborhoodMatrix::ClosedNeighborhoodMatrix(const Graph& g)
    : n_(g.n()), words_((g.n() + 63) / 64), bits_(n_ * words_, 0) {
  auto set = [this](Vertex row, Vertex col) {
    bits_[(row - 1) * words_ + (col - 1) / 64] |= std::uint64_t{1}
                                                   << ((col - 1) % 64);
  };
  for (Vertex v = 1; v <= n_; ++v) set(v, v);
  for (auto [u, v] : g.edges()) {
    set(u, v);
    set(v, u);
  }
}

NeighborhoodArray::NeighborhoodArray(const Graph& g) : offsets_(g.n() + 1, 0) {
  members_.reserve(g.n() + 2 * g.edge_count());
  for (Vertex v = 1; v <= g.n(); ++v) {
    auto nb = g.neighbors(v);
    auto split = std::lower_bound(nb.begin(), nb.end(), v);
    members_.insert(members_.end(), nb.begin(), split);
    members_.push_back(v);
    members_.insert(members_.end(), split, nb.end());
    offsets_[v] = members_.size();
  }
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (Vertex v : image_) {
    if (v < 1 || v > image_.size() || seen[v]) {
      throw UsageError("not a permutation of 1.." +
                       std::to_string(image_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{1});
  return Permutation(std::move(image));
}

Permutation Permutation::from_order(std::span<const Vertex> order) {
  std::vector<Vertex> image(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Vertex u = order[pos];
    if (u < 1 || u > order.size() || image[u - 1] != 0) {
      throw UsageError("vertex order is not a permutation of 1.." +
                       std::to_string(order.size()));
    }
    image[u - 1] = static_cast<Vertex>(pos + 1);
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (std::size_t u = 0; u < image_.size(); ++u) {
    inv[image_[u] - 1] = static_cast<Vertex>(u + 1);
  }
  return Permutation(std::move(inv));
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<Vertex> out;
  out.reserve(nb.size() + 1);
  auto split = std::lower_bound(nb.begin(), nb.end(), v);
  out.insert(out.end(), nb.begin(), split);
  out.push_back(v);
  out.insert(out.end(), split, nb.end());
  return out;
}

std::optional<TwinFailure> find_twins(const Graph& g) {
  const auto& a = g.neighborhood_array();
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{1});
  auto less = [&](Vertex x, Vertex y) {
    auto nx = a[x];
    auto ny = a[y];
    if (std::lexicographical_compare(nx.begin(), nx.end(), ny.begin(), ny.end()))
      return true;
    if (std::equal(nx.begin(), nx.end(), ny.begin(), ny.end())) return x < y;
    return false;
  };
  std::sort(order.begin(), order.end(), less);

  // Within a run of equal neighborhoods the vertices are ascending. The scan
  // first meets a twin at the second member of some run, so the reported pair
  // is the run whose second member is smallest.
  std::optional<TwinFailure> best;
  for (std::size_t i = 0; i + 1 < order.size();) {
    std::size_t end = i + 1;
    auto ni = a[order[i]];
    while (end < order.size()) {
      auto ne = a[order[end]];
      if (!std::equal(ni.begin(), ni.end(), ne.begin(), ne.end())) break;
      ++end;
    }
    if (end - i >= 2 && (!best || order[i + 1] < best->j)) {
      best = TwinFailure{order[i], order[i + 1]};
    }
    i = end;
  }
  return best;
}

bool is_identifying_code(const Graph& g, const Code& c) {
  std::vector<bool> in_code(g.n() + 1, false);
  for (Vertex v : c) {
    if (v < 1 || v > g.n()) {
      throw UsageError("code member " + std::to_string(v) + " is outside 1.." +
                       std::to_string(g.n()));
    }
    in_code[v] = true;
  }
  const auto& a = g.neighborhood_array();
  std::vector<std::vector<Vertex>> traces(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) {
    for (Vertex u : a[v]) {
      if (in_code[u]) traces[v - 1].push_back(u);
    }
    if (traces[v - 1].empty()) return false;
  }
  std::sort(traces.begin(), traces.end());
  return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

Graph permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.n()) {
    throw UsageError("permutation size " + std::to_string(p.size()) +
                     " does not match graph order " + std::to_string(g.n()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return Graph(g.n(), edges);
}

Code permute(const Code& c, const Permutation& p) {
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (Vertex v : c) {
    if (v < 1 || v > p.size()) {
      throw UsageError("code member " + std::to_string(v) +
                       " is outside the permutation's range");
    }
    out.push_back(p(v));
  }
  return Code(std::move(out));
}

}  // namespace idcode
