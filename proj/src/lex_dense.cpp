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

#include "idcode/lex_dense.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "idcode/errors.hpp"

namespace idcode {
namespace {

// Bit positions of a length-n row that live in word w.
std::uint64_t bits_in_word(std::size_t n, std::size_t w) {
  return std::min<std::size_t>(64, n - 64 * w);
}

void check_range(std::size_t n, Vertex v) {
  if (v < 1 || v > n) {
    throw UsageError("vertex " + std::to_string(v) + " is outside 1.." +
                     std::to_string(n));
  }
}

}  // namespace

DenseCoverageState::DenseCoverageState(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

bool DenseCoverageState::row_is_zero(Vertex a) const {
  auto r = row(a);
  return std::all_of(r.begin(), r.end(), [](std::uint64_t w) { return w == 0; });
}

bool DenseCoverageState::rows_equal(Vertex a, Vertex b, WorkCounter* work) const {
  auto ra = row(a);
  auto rb = row(b);
  std::uint64_t diff = 0;
  for (std::size_t w = 0; w < words_; ++w) diff |= ra[w] ^ rb[w];
  if (work) work->add(n_);
  return diff == 0;
}

std::vector<Vertex> DenseCoverageState::support(Vertex a) const {
  std::vector<Vertex> out;
  auto r = row(a);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(64 * w + std::countr_zero(bits) + 1));
    }
  }
  return out;
}

void DenseCoverageState::insert_codeword(const ClosedNeighborhoodMatrix& b,
                                         Vertex l, WorkCounter* work) {
  const std::size_t word = (l - 1) / 64;
  const std::uint64_t mask = std::uint64_t{1} << ((l - 1) % 64);
  for (Vertex a = 1; a <= n_; ++a) {
    if (b.at(a, l)) bits_[(a - 1) * words_ + word] |= mask;
  }
  if (work) work->add(n_);
}

Vertex min1(const ClosedNeighborhoodMatrix& b, Vertex j) {
  check_range(b.n(), j);
  auto r = b.row(j);
  for (std::size_t w = 0; w < r.size(); ++w) {
    if (r[w] != 0) return static_cast<Vertex>(64 * w + std::countr_zero(r[w]) + 1);
  }
  // Unreachable for a well-formed matrix: the diagonal is all ones.
  return j;
}

Vertex min2(const ClosedNeighborhoodMatrix& b, Vertex j, Vertex k,
            WorkCounter* work) {
  check_range(b.n(), j);
  check_range(b.n(), k);
  auto rj = b.row(j);
  auto rk = b.row(k);
  std::uint64_t examined = 0;
  Vertex found = static_cast<Vertex>(b.n() + 1);
  for (std::size_t w = 0; w < rj.size(); ++w) {
    const std::uint64_t diff = rj[w] ^ rk[w];
    if (diff != 0) {
      const int bit = std::countr_zero(diff);
      examined += bit + 1;
      found = static_cast<Vertex>(64 * w + bit + 1);
      break;
    }
    examined += bits_in_word(b.n(), w);
  }
  if (work) work->add(examined);
  return found;
}

DenseLexBuilder::DenseLexBuilder(const ClosedNeighborhoodMatrix& b,
                                 WorkCounter* work)
    : b_(&b), work_(work), x_(b.n()) {}

void DenseLexBuilder::step() {
  if (done()) return;
  const Vertex n = static_cast<Vertex>(b_->n());
  const Vertex j = next_;
  Vertex l = 0;
  if (x_.row_is_zero(j)) {
    l = min1(*b_, j);
  } else {
    Vertex k = 1;
    while (k < j && !x_.rows_equal(j, k, work_)) ++k;
    if (k < j) {
      l = min2(*b_, j, k, work_);
      if (l == n + 1) failure_ = TwinFailure{k, j};
    }
  }
  if (l >= 1 && l <= n) {
    codewords_.push_back(l);
    x_.insert_codeword(*b_, l, work_);
  }
  ++next_;
}

RunOutcome DenseLexBuilder::outcome() const {
  if (failure_) return *failure_;
  return Code(codewords_);
}

RunOutcome lex_code_dense(const ClosedNeighborhoodMatrix& b, WorkCounter* work) {
  DenseLexBuilder builder(b, work);
  while (!builder.done()) builder.step();
  return builder.outcome();
}

}  // namespace idcode
