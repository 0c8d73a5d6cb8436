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
#include <stdexcept>
#include <string>

#include "idcode/types.hpp"

namespace idcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (vertex out of range, bad
/// permutation, invalid generator parameters, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph text. `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The graph has two vertices with equal closed neighborhoods, so no
/// identifying code exists.
class TwinError : public Error {
 public:
  explicit TwinError(TwinFailure twins)
      : Error("graph is not twin-free: vertices " + std::to_string(twins.k) +
              " and " + std::to_string(twins.j) +
              " have equal closed neighborhoods"),
        twins_(twins) {}

  const TwinFailure& twins() const noexcept { return twins_; }

 private:
  TwinFailure twins_;
};

}  // namespace idcode
