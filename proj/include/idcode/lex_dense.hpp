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
#include <optional>
#include <span>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/types.hpp"

namespace idcode {

/// Packed n×n bit matrix X whose row a is the characteristic vector of
/// N(v_a) ∩ C for the code C built so far.
///
/// Codewords are inserted column-wise (column l of X becomes column l of B);
/// queries read whole rows.
class DenseCoverageState {
 public:
  explicit DenseCoverageState(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::span<const std::uint64_t> row(Vertex a) const {
    return {bits_.data() + (a - 1) * words_, words_};
  }
  bool at(Vertex a, Vertex l) const {
    return (row(a)[(l - 1) / 64] >> ((l - 1) % 64)) & 1U;
  }
  bool row_is_zero(Vertex a) const;
  /// Whole-row equality. Every word is compared, so `work` grows by n.
  bool rows_equal(Vertex a, Vertex b, WorkCounter* work = nullptr) const;
  /// supp(X(a)) ascending.
  std::vector<Vertex> support(Vertex a) const;

  /// X^T(l) ← B^T(l).
  void insert_codeword(const ClosedNeighborhoodMatrix& b, Vertex l,
                       WorkCounter* work = nullptr);

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// min(N(v_j)). Never fails, since j ∈ N(v_j).
Vertex min1(const ClosedNeighborhoodMatrix& b, Vertex j);

/// The smallest l with b_{j,l} ≠ b_{k,l}, i.e. min(N(v_j) Δ N(v_k)), or n+1
/// when the two closed neighborhoods are equal.
Vertex min2(const ClosedNeighborhoodMatrix& b, Vertex j, Vertex k,
            WorkCounter* work = nullptr);

/// Step-by-step driver for the matrix construction. Each `step()` processes
/// the next vertex j and adds at most one codeword:
///
///   - X(j) = 0: add min1(j).
///   - otherwise find the smallest k < j with X(k) = X(j); if one exists add
///     min2(j, k), or stop with a twin failure (k, j) if min2 reports n+1.
///
/// `lex_code_dense` runs it to completion; tests drive it one step at a time
/// to inspect X between steps.
class DenseLexBuilder {
 public:
  explicit DenseLexBuilder(const ClosedNeighborhoodMatrix& b,
                           WorkCounter* work = nullptr);

  bool done() const noexcept { return failure_ || next_ > b_->n(); }
  /// The vertex the next step will process (n+1 once every vertex is done).
  Vertex next_vertex() const noexcept { return next_; }
  void step();

  const DenseCoverageState& coverage() const noexcept { return x_; }
  /// Codewords in insertion order.
  std::span<const Vertex> codewords() const noexcept { return codewords_; }
  const std::optional<TwinFailure>& failure() const noexcept { return failure_; }

  /// Requires done().
  RunOutcome outcome() const;

 private:
  const ClosedNeighborhoodMatrix* b_;
  WorkCounter* work_;
  DenseCoverageState x_;
  std::vector<Vertex> codewords_;
  std::optional<TwinFailure> failure_;
  Vertex next_ = 1;
};

RunOutcome lex_code_dense(const ClosedNeighborhoodMatrix& b,
                          WorkCounter* work = nullptr);
inline RunOutcome lex_code_dense(const Graph& g, WorkCounter* work = nullptr) {
  return lex_code_dense(g.matrix(), work);
}

}  // namespace idcode
