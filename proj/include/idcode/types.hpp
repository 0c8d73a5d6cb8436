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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace idcode {

/// Vertices are numbered 1..n at every public interface.
using Vertex = std::uint32_t;

/// Tally of elementary operations performed by a construction: bits compared
/// for the matrix algorithm, list elements touched for the list algorithm.
struct WorkCounter {
  std::uint64_t count = 0;
  void add(std::uint64_t ops) noexcept { count += ops; }
};

/// Two distinct vertices k < j with N(v_k) = N(v_j).
struct TwinFailure {
  Vertex k = 0;
  Vertex j = 0;

  friend bool operator==(const TwinFailure&, const TwinFailure&) = default;
};

/// A set of vertices, stored strictly increasing.
///
/// Range checks against a particular graph happen where the code is used,
/// since a Code does not know the graph it belongs to.
class Code {
 public:
  Code() = default;
  /// Sorts `members`; throws UsageError on duplicates or on vertex 0.
  explicit Code(std::vector<Vertex> members);
  Code(std::initializer_list<Vertex> members)
      : Code(std::vector<Vertex>(members)) {}

  /// {1, ..., m}.
  static Code prefix(Vertex m);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const Code& other) const noexcept;

  /// Copy without `v` (no-op if absent).
  Code without(Vertex v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Result of a code construction: either a code, or the twin pair that made
/// construction impossible.
class RunOutcome {
 public:
  RunOutcome(Code code) : value_(std::move(code)) {}
  RunOutcome(TwinFailure twins) : value_(twins) {}

  bool has_code() const noexcept { return std::holds_alternative<Code>(value_); }
  bool is_twin_failure() const noexcept { return !has_code(); }

  /// Throws TwinError when the run failed.
  const Code& code() const;
  /// Throws std::bad_variant_access when the run produced a code.
  const TwinFailure& twins() const { return std::get<TwinFailure>(value_); }

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;

 private:
  std::variant<Code, TwinFailure> value_;
};

}  // namespace idcode
