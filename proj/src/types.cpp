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

#include "idcode/types.hpp"

#include <algorithm>
#include <string>

#include "idcode/errors.hpp"

namespace idcode {

Code::Code(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() == 0) {
    throw UsageError("code member 0 is out of range (vertices are 1-indexed)");
  }
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw UsageError("duplicate code member " + std::to_string(*dup));
  }
}

Code Code::prefix(Vertex m) {
  std::vector<Vertex> members(m);
  for (Vertex i = 0; i < m; ++i) members[i] = i + 1;
  return Code(std::move(members));
}

bool Code::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool Code::is_subset_of(const Code& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Code Code::without(Vertex v) const {
  Code out;
  out.members_.reserve(members_.size());
  for (Vertex m : members_) {
    if (m != v) out.members_.push_back(m);
  }
  return out;
}

const Code& RunOutcome::code() const {
  if (auto* c = std::get_if<Code>(&value_)) return *c;
  throw TwinError(std::get<TwinFailure>(value_));
}

}  // namespace idcode
