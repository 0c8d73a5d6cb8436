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

#include "idcode/lex_sparse.hpp"

#include <algorithm>
#include <string>

#include "idcode/errors.hpp"

namespace idcode {

bool SparseCoverageState::lists_equal(Vertex a, Vertex b,
                                      WorkCounter* work) const {
  const auto& la = lists_[a - 1];
  const auto& lb = lists_[b - 1];
  std::uint64_t touched = 1;
  bool equal = la.size() == lb.size();
  for (std::size_t i = 0; equal && i < la.size(); ++i) {
    ++touched;
    equal = la[i] == lb[i];
  }
  if (work) work->add(touched);
  return equal;
}

void SparseCoverageState::insert_codeword(const NeighborhoodArray& a, Vertex l,
                                          WorkCounter* work) {
  for (Vertex v : a[l]) {
    auto& list = lists_[v - 1];
    list.insert(std::upper_bound(list.begin(), list.end(), l), l);
  }
  if (work) work->add(a.size(l));
}

Vertex min3(const NeighborhoodArray& a, Vertex j, Vertex k, WorkCounter* work) {
  const std::size_t n = a.n();
  for (Vertex v : {j, k}) {
    if (v < 1 || v > n) {
      throw UsageError("vertex " + std::to_string(v) + " is outside 1.." +
                       std::to_string(n));
    }
  }
  auto lj = a[j];
  auto lk = a[k];
  const std::size_t common = std::min(lj.size(), lk.size());
  std::uint64_t touched = 0;
  Vertex l = static_cast<Vertex>(n + 1);
  std::size_t pos = 0;
  for (; pos < common; ++pos) {
    ++touched;
    if (lj[pos] != lk[pos]) {
      l = std::min(lj[pos], lk[pos]);
      break;
    }
  }
  if (pos == common) {
    if (lj.size() < lk.size()) {
      l = lk[common];
    } else if (lk.size() < lj.size()) {
      l = lj[common];
    }
    ++touched;
  }
  if (work) work->add(touched);
  return l;
}

SparseLexBuilder::SparseLexBuilder(const NeighborhoodArray& a, WorkCounter* work)
    : a_(&a), work_(work), x_(a.n()) {}

void SparseLexBuilder::step() {
  if (done()) return;
  const Vertex n = static_cast<Vertex>(a_->n());
  const Vertex j = next_;
  Vertex l = 0;
  if (x_.list(j).empty()) {
    l = (*a_)[j].front();
  } else {
    Vertex k = 1;
    while (k < j && !x_.lists_equal(j, k, work_)) ++k;
    if (k < j) {
      l = min3(*a_, j, k, work_);
      if (l == n + 1) failure_ = TwinFailure{k, j};
    }
  }
  if (l >= 1 && l <= n) {
    codewords_.push_back(l);
    x_.insert_codeword(*a_, l, work_);
  }
  ++next_;
}

RunOutcome SparseLexBuilder::outcome() const {
  if (failure_) return *failure_;
  return Code(codewords_);
}

RunOutcome lex_code_sparse(const NeighborhoodArray& a, WorkCounter* work) {
  SparseLexBuilder builder(a, work);
  while (!builder.done()) builder.step();
  return builder.outcome();
}

}  // namespace idcode
