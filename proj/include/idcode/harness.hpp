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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idcode/generators.hpp"
#include "idcode/graph.hpp"
#include "idcode/types.hpp"

namespace idcode {

/// How vertices are relabeled before a construction runs. The construction
/// scans vertices by label, so this decides the scan order.
struct OrderingStrategy {
  enum class Kind { kIdentity, kRandom, kDegreeAscending, kDegreeDescending, kExplicit };

  Kind kind = Kind::kIdentity;
  /// kRandom only.
  std::uint64_t seed = 0;
  /// kExplicit only: old vertices in scan order.
  std::vector<Vertex> order;

  static OrderingStrategy identity() { return {}; }
  static OrderingStrategy random(std::uint64_t seed) {
    return {Kind::kRandom, seed, {}};
  }
  static OrderingStrategy degree_ascending() { return {Kind::kDegreeAscending, 0, {}}; }
  static OrderingStrategy degree_descending() { return {Kind::kDegreeDescending, 0, {}}; }
  static OrderingStrategy explicit_order(std::vector<Vertex> order) {
    return {Kind::kExplicit, 0, std::move(order)};
  }

  /// "identity", "random", "random:SEED", "degree-asc", "degree-desc", or
  /// "explicit:3,1,2". Bare "random" uses `default_seed`.
  static OrderingStrategy parse(std::string_view text, std::uint64_t default_seed);
  std::string name() const;
};

/// Relabeling for `strategy` on `g`. Degree orders break ties by index.
/// kRandom shuffles with `rng` when given, else with a generator seeded from
/// `strategy.seed`.
Permutation make_ordering(const Graph& g, const OrderingStrategy& strategy,
                          Rng* rng = nullptr);

/// Relabel by `p`, run the list construction, and map the code back through
/// p⁻¹ so it refers to the original labels.
RunOutcome lex_code_ordered(const Graph& g, const Permutation& p,
                            bool dense = false);

struct RestartRun {
  std::uint64_t seed = 0;
  std::size_t cardinality = 0;
  double seconds = 0;
};

struct RestartReport {
  Code best_code;
  std::size_t best_cardinality = 0;
  std::size_t best_restart = 0;
  /// Indexed by restart.
  std::vector<RestartRun> runs;
};

/// Runs `restarts` orderings and keeps the smallest code (earliest restart on
/// ties). Restart i of a random strategy shuffles with a generator seeded by
/// the i-th draw of mt19937_64(seed), so a longer run extends a shorter one.
/// Throws TwinError before any restart if g has twins, UsageError if
/// restarts == 0.
RestartReport run_restarts(const Graph& g, const OrderingStrategy& strategy,
                           std::size_t restarts, std::uint64_t seed);

/// Least-squares slope of log(ys) against log(xs).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// (rows, cols) with rows the largest divisor of n not above sqrt(n).
std::pair<std::size_t, std::size_t> grid_shape(std::size_t n);

/// Benchmark instance of `family` ("grid", "path", "cycle", "hypercube",
/// "gnp") with n vertices, or nullopt with a reason when n does not fit.
std::optional<Graph> bench_instance(std::string_view family, std::size_t n,
                                    std::uint64_t seed, std::string* why = nullptr);

struct BenchSample {
  std::string family;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  double dense_seconds = 0;  // median
  double sparse_seconds = 0; // median
  std::uint64_t dense_work = 0;
  std::uint64_t sparse_work = 0;
  std::size_t code_size = 0;
};

struct BenchFit {
  std::string family;
  double dense_work_slope = 0;
  double sparse_work_slope = 0;
  double dense_time_slope = 0;
  double sparse_time_slope = 0;
  /// Smallest sampled n from which sparse is faster at every larger size.
  std::optional<std::size_t> crossover_n;
};

struct BenchSkip {
  std::string family;
  std::size_t n = 0;
  std::string reason;
};

struct BenchReport {
  std::vector<BenchSample> samples;
  std::vector<BenchFit> fits;
  std::vector<BenchSkip> skipped;
};

/// Runs both constructions on every (family, size) instance `repetitions`
/// times, after relabeling each instance by `ordering`. Instances with twins,
/// or whose work counters differ between repetitions, are skipped and
/// reported.
BenchReport run_bench(std::span<const std::string> families,
                      std::span<const std::size_t> sizes, std::size_t repetitions,
                      std::uint64_t seed,
                      const OrderingStrategy& ordering = OrderingStrategy::identity());

/// One CSV table with a leading `record` column: "sample", "fit" or "skipped".
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace idcode
