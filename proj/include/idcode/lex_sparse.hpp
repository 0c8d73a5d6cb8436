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

#include <optional>
#include <span>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/types.hpp"

namespace idcode {

/// Per-vertex sorted lists X(v) = N(v) ∩ C. Inserting codeword l touches only
/// the lists of the d_l vertices in N(v_l).
class SparseCoverageState {
 public:
  explicit SparseCoverageState(std::size_t n) : lists_(n) {}

  std::size_t n() const noexcept { return lists_.size(); }
  std::span<const Vertex> list(Vertex v) const { return lists_[v - 1]; }
  /// Lengths first, then elements; adds one touch for the length check plus
  /// one per element pair compared.
  bool lists_equal(Vertex a, Vertex b, WorkCounter* work = nullptr) const;

  void insert_codeword(const NeighborhoodArray& a, Vertex l,
                       WorkCounter* work = nullptr);

 private:
  std::vector<std::vector<Vertex>> lists_;
};

/// min(N(v_j) Δ N(v_k)) by a synchronized walk over the two sorted lists,
/// stopping at the first position where they differ; if one list is a
/// prefix of the other, the next element of the longer one. Returns n+1 when
/// the lists are equal.
Vertex min3(const NeighborhoodArray& a, Vertex j, Vertex k,
            WorkCounter* work = nullptr);

/// List-based counterpart of DenseLexBuilder. Processes vertices in the same
/// order with the same rules, so both produce identical outcomes.
class SparseLexBuilder {
 public:
  explicit SparseLexBuilder(const NeighborhoodArray& a,
                            WorkCounter* work = nullptr);

  bool done() const noexcept { return failure_ || next_ > a_->n(); }
  Vertex next_vertex() const noexcept { return next_; }
  void step();

  const SparseCoverageState& coverage() const noexcept { return x_; }
  std::span<const Vertex> codewords() const noexcept { return codewords_; }
  const std::optional<TwinFailure>& failure() const noexcept { return failure_; }

  RunOutcome outcome() const;

 private:
  const NeighborhoodArray* a_;
  WorkCounter* work_;
  SparseCoverageState x_;
  std::vector<Vertex> codewords_;
  std::optional<TwinFailure> failure_;
  Vertex next_ = 1;
};

RunOutcome lex_code_sparse(const NeighborhoodArray& a,
                           WorkCounter* work = nullptr);
inline RunOutcome lex_code_sparse(const Graph& g, WorkCounter* work = nullptr) {
  return lex_code_sparse(g.neighborhood_array(), work);
}

}  // namespace idcode
