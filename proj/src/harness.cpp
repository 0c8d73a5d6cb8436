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

#include "idcode/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "idcode/errors.hpp"
#include "idcode/lex_dense.hpp"
#include "idcode/lex_sparse.hpp"

namespace idcode {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  std::istringstream in{std::string(text)};
  if (text.empty() || text.front() == '-' || !(in >> value) || !in.eof()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

}  // namespace

OrderingStrategy OrderingStrategy::parse(std::string_view text,
                                         std::uint64_t default_seed) {
  if (text == "identity") return identity();
  if (text == "degree-asc") return degree_ascending();
  if (text == "degree-desc") return degree_descending();
  if (text == "random") return random(default_seed);
  if (text.starts_with("random:")) {
    return random(parse_u64(text.substr(7), "random seed"));
  }
  if (text.starts_with("explicit:")) {
    std::vector<Vertex> order;
    std::string_view rest = text.substr(9);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      order.push_back(static_cast<Vertex>(parse_u64(rest.substr(0, comma), "vertex")));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return explicit_order(std::move(order));
  }
  throw UsageError("unknown ordering '" + std::string(text) + "'");
}

std::string OrderingStrategy::name() const {
  switch (kind) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kRandom:
      return "random:" + std::to_string(seed);
    case Kind::kDegreeAscending:
      return "degree-asc";
    case Kind::kDegreeDescending:
      return "degree-desc";
    case Kind::kExplicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(order[i]);
      }
      return out;
    }
  }
  return "unknown";
}

Permutation make_ordering(const Graph& g, const OrderingStrategy& strategy,
                          Rng* rng) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{1});
  switch (strategy.kind) {
    case OrderingStrategy::Kind::kIdentity:
      break;
    case OrderingStrategy::Kind::kRandom: {
      if (rng) {
        shuffle(order, *rng);
      } else {
        Rng own(strategy.seed);
        shuffle(order, own);
      }
      break;
    }
    case OrderingStrategy::Kind::kDegreeAscending:
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) < g.degree(b);
      });
      break;
    case OrderingStrategy::Kind::kDegreeDescending:
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) > g.degree(b);
      });
      break;
    case OrderingStrategy::Kind::kExplicit:
      if (strategy.order.size() != g.n()) {
        throw UsageError("explicit ordering lists " +
                         std::to_string(strategy.order.size()) + " vertices, graph has " +
                         std::to_string(g.n()));
      }
      order = strategy.order;
      break;
  }
  return Permutation::from_order(order);
}

RunOutcome lex_code_ordered(const Graph& g, const Permutation& p, bool dense) {
  const Graph relabeled = permute(g, p);
  RunOutcome outcome = dense ? lex_code_dense(relabeled) : lex_code_sparse(relabeled);
  const Permutation back = p.inverse();
  if (outcome.is_twin_failure()) {
    Vertex a = back(outcome.twins().k);
    Vertex b = back(outcome.twins().j);
    return TwinFailure{std::min(a, b), std::max(a, b)};
  }
  return permute(outcome.code(), back);
}

RestartReport run_restarts(const Graph& g, const OrderingStrategy& strategy,
                           std::size_t restarts, std::uint64_t seed) {
  if (restarts == 0) throw UsageError("restarts must be at least 1");
  if (auto twins = find_twins(g)) throw TwinError(*twins);

  RestartReport report;
  report.runs.resize(restarts);
  Rng master(seed);
  for (std::size_t i = 0; i < restarts; ++i) {
    const auto start = Clock::now();
    RestartRun& run = report.runs[i];
    run.seed = master();
    Rng rng(run.seed);
    const Permutation p = make_ordering(g, strategy, &rng);
    Code code = lex_code_ordered(g, p).code();
    run.cardinality = code.size();
    run.seconds = seconds_since(start);
    if (i == 0 || code.size() < report.best_cardinality) {
      report.best_cardinality = code.size();
      report.best_code = std::move(code);
      report.best_restart = i;
    }
  }
  return report;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw UsageError("slope fit needs at least two (x, y) points");
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::pair<std::size_t, std::size_t> grid_shape(std::size_t n) {
  std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (rows * rows > n) --rows;
  while ((rows + 1) * (rows + 1) <= n) ++rows;
  while (rows > 1 && n % rows != 0) --rows;
  return {rows, n / rows};
}

std::optional<Graph> bench_instance(std::string_view family, std::size_t n,
                                    std::uint64_t seed, std::string* why) {
  auto skip = [&](std::string reason) -> std::optional<Graph> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };
  if (n == 0) return skip("n must be positive");
  if (family == "grid") {
    auto [rows, cols] = grid_shape(n);
    return grid_graph(rows, cols);
  }
  if (family == "path") return path_graph(n);
  if (family == "cycle") {
    if (n < 3) return skip("cycle needs n >= 3");
    return cycle_graph(n);
  }
  if (family == "hypercube") {
    if (!std::has_single_bit(n)) return skip("hypercube needs a power of two");
    return hypercube_graph(static_cast<std::size_t>(std::countr_zero(n)));
  }
  if (family == "gnp") {
    // Constant expected degree 4.
    const double p = n > 1 ? std::min(1.0, 4.0 / static_cast<double>(n - 1)) : 0.0;
    return gnp_graph(n, p, seed);
  }
  throw UsageError("unknown bench family '" + std::string(family) + "'");
}

BenchReport run_bench(std::span<const std::string> families,
                      std::span<const std::size_t> sizes, std::size_t repetitions,
                      std::uint64_t seed, const OrderingStrategy& ordering) {
  if (repetitions == 0) throw UsageError("repetitions must be at least 1");
  BenchReport report;
  for (const auto& family : families) {
    std::vector<BenchSample> rows;
    for (std::size_t n : sizes) {
      std::string why;
      auto g = bench_instance(family, n, seed, &why);
      if (!g) {
        report.skipped.push_back({family, n, why});
        continue;
      }
      if (ordering.kind != OrderingStrategy::Kind::kIdentity) {
        g = permute(*g, make_ordering(*g, ordering));
      }
      if (auto twins = find_twins(*g)) {
        report.skipped.push_back({family, n,
                                  "not twin-free (" + std::to_string(twins->k) + ", " +
                                      std::to_string(twins->j) + ")"});
        continue;
      }
      const auto& matrix = g->matrix();
      const auto& lists = g->neighborhood_array();
      BenchSample sample{family, g->n(), g->max_degree()};
      std::vector<double> dense_times, sparse_times;
      bool deterministic = true;
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        WorkCounter dense_work, sparse_work;
        auto start = Clock::now();
        RunOutcome dense = lex_code_dense(matrix, &dense_work);
        dense_times.push_back(seconds_since(start));
        start = Clock::now();
        RunOutcome sparse = lex_code_sparse(lists, &sparse_work);
        sparse_times.push_back(seconds_since(start));
        if (rep == 0) {
          sample.dense_work = dense_work.count;
          sample.sparse_work = sparse_work.count;
          sample.code_size = sparse.code().size();
        } else if (sample.dense_work != dense_work.count ||
                   sample.sparse_work != sparse_work.count) {
          deterministic = false;
        }
        if (!(dense == sparse)) deterministic = false;
      }
      if (!deterministic) {
        report.skipped.push_back({family, n, "runs disagreed between repetitions"});
        continue;
      }
      sample.dense_seconds = median(dense_times);
      sample.sparse_seconds = median(sparse_times);
      rows.push_back(sample);
    }

    if (rows.size() >= 2) {
      std::vector<double> ns, dw, sw, dt, st;
      for (const auto& r : rows) {
        ns.push_back(static_cast<double>(r.n));
        dw.push_back(static_cast<double>(r.dense_work));
        sw.push_back(static_cast<double>(r.sparse_work));
        // Clock resolution floor so tiny instances do not yield log(0).
        dt.push_back(std::max(r.dense_seconds, 1e-9));
        st.push_back(std::max(r.sparse_seconds, 1e-9));
      }
      BenchFit fit{family, loglog_slope(ns, dw), loglog_slope(ns, sw),
                   loglog_slope(ns, dt), loglog_slope(ns, st), std::nullopt};
      for (std::size_t i = rows.size(); i-- > 0;) {
        if (rows[i].sparse_seconds >= rows[i].dense_seconds) break;
        fit.crossover_n = rows[i].n;
      }
      report.fits.push_back(fit);
    }
    report.samples.insert(report.samples.end(), rows.begin(), rows.end());
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "record,family,n,max_degree,dense_seconds,sparse_seconds,dense_work,"
         "sparse_work,code_size,dense_work_slope,sparse_work_slope,"
         "dense_time_slope,sparse_time_slope,crossover_n,note\n";
  const auto flags = out.flags();
  out << std::setprecision(9);
  for (const auto& s : report.samples) {
    out << "sample," << s.family << ',' << s.n << ',' << s.max_degree << ','
        << s.dense_seconds << ',' << s.sparse_seconds << ',' << s.dense_work << ','
        << s.sparse_work << ',' << s.code_size << ",,,,,,\n";
  }
  for (const auto& f : report.fits) {
    out << "fit," << f.family << ",,,,,,,," << f.dense_work_slope << ','
        << f.sparse_work_slope << ',' << f.dense_time_slope << ','
        << f.sparse_time_slope << ',';
    if (f.crossover_n) out << *f.crossover_n;
    out << ",\n";
  }
  for (const auto& s : report.skipped) {
    std::string note = s.reason;
    std::string quoted = "\"";
    for (char ch : note) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += '"';
    out << "skipped," << s.family << ',' << s.n << ",,,,,,,,,,,," << quoted << '\n';
  }
  out.flags(flags);
}

}  // namespace idcode
