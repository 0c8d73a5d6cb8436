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
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "idcode/baselines.hpp"
#include "idcode/errors.hpp"
#include "idcode/generators.hpp"
#include "idcode/lex_dense.hpp"
#include "idcode/lex_sparse.hpp"
#include "oracles.hpp"

namespace idcode {
namespace {

Graph P3() { return Graph(3, {{1, 2}, {2, 3}}); }

TEST(OrderingTest, ParseAndName) {
  EXPECT_EQ(OrderingStrategy::parse("identity", 0).kind, OrderingStrategy::Kind::kIdentity);
  auto r = OrderingStrategy::parse("random", 42);
  EXPECT_EQ(r.kind, OrderingStrategy::Kind::kRandom);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_EQ(OrderingStrategy::parse("random:7", 42).seed, 7u);
  auto e = OrderingStrategy::parse("explicit:3,1,2", 0);
  EXPECT_EQ(e.order, (std::vector<Vertex>{3, 1, 2}));
  EXPECT_EQ(e.name(), "explicit:3,1,2");
  EXPECT_EQ(OrderingStrategy::parse("degree-desc", 0).name(), "degree-desc");
  EXPECT_THROW(OrderingStrategy::parse("sideways", 0), UsageError);
  EXPECT_THROW(OrderingStrategy::parse("random:x", 0), UsageError);
  EXPECT_THROW(OrderingStrategy::parse("explicit:1,,2", 0), UsageError);
}

TEST(OrderingTest, StrategiesYieldBijections) {
  const Graph g = oracle::corpus(1, 30, 3).front();
  const Graph star(5, {{3, 1}, {3, 2}, {3, 4}, {3, 5}, {1, 2}});
  EXPECT_EQ(make_ordering(star, OrderingStrategy::identity()), Permutation::identity(5));
  // Degrees: 1:2 2:2 3:4 4:1 5:1.
  const Permutation asc = make_ordering(star, OrderingStrategy::degree_ascending());
  EXPECT_EQ(asc, Permutation::from_order(std::vector<Vertex>{4, 5, 1, 2, 3}));
  const Permutation desc = make_ordering(star, OrderingStrategy::degree_descending());
  EXPECT_EQ(desc, Permutation::from_order(std::vector<Vertex>{3, 1, 2, 4, 5}));
  const Permutation ex =
      make_ordering(star, OrderingStrategy::explicit_order({5, 4, 3, 2, 1}));
  EXPECT_EQ(ex(5), 1u);
  EXPECT_THROW(make_ordering(star, OrderingStrategy::explicit_order({1, 2})), UsageError);
  EXPECT_THROW(make_ordering(star, OrderingStrategy::explicit_order({1, 2, 2, 4, 5})),
               UsageError);
  // Same seed, same permutation.
  EXPECT_EQ(make_ordering(g, OrderingStrategy::random(9)),
            make_ordering(g, OrderingStrategy::random(9)));
}

TEST(OrderedRunTest, MappedBackCodeIdentifiesOriginal) {
  Rng rng(101);
  for (const auto& g : oracle::corpus(200, 40, 103)) {
    if (find_twins(g)) continue;
    const Permutation p = make_ordering(g, OrderingStrategy::random(0), &rng);
    const Code permuted = lex_code_sparse(permute(g, p)).code();
    const Code back = lex_code_ordered(g, p).code();
    EXPECT_TRUE(oracle::is_identifying(g, back));
    EXPECT_EQ(back.size(), permuted.size());
    EXPECT_EQ(lex_code_ordered(g, p, /*dense=*/true).code(), back);
  }
}

TEST(OrderedRunTest, TwinPairMapsBackToOriginalLabels) {
  // Twins 1 and 2; relabeling swaps them to 4 and 5.
  const Graph g(5, {{1, 2}, {3, 4}, {4, 5}});
  const Permutation p = Permutation::from_order(std::vector<Vertex>{3, 4, 5, 2, 1});
  EXPECT_EQ(lex_code_ordered(g, p), RunOutcome(TwinFailure{1, 2}));
}

TEST(RestartsTest, Examples) {
  const Graph fig = nonminimal_fixture();
  auto single = run_restarts(fig, OrderingStrategy::identity(), 1, 5);
  EXPECT_EQ(single.best_code, lex_code_dense(fig).code());

  auto many = run_restarts(fig, OrderingStrategy::random(0), 200, 5);
  EXPECT_LE(many.best_cardinality, 5u);
  EXPECT_TRUE(is_identifying_code(fig, many.best_code));

  for (std::uint64_t seed : {1, 2, 3}) {
    EXPECT_EQ(run_restarts(P3(), OrderingStrategy::random(0), 50, seed).best_cardinality, 2u);
  }
}

TEST(RestartsTest, ErrorsAndDeterminism) {
  EXPECT_THROW(run_restarts(Graph(2, {{1, 2}}), OrderingStrategy::identity(), 3, 1),
               TwinError);
  EXPECT_THROW(run_restarts(P3(), OrderingStrategy::identity(), 0, 1), UsageError);

  const Graph g = grid_graph(5, 6);
  auto a = run_restarts(g, OrderingStrategy::random(0), 40, 77);
  auto b = run_restarts(g, OrderingStrategy::random(0), 40, 77);
  EXPECT_EQ(a.best_code, b.best_code);
  ASSERT_EQ(a.runs.size(), 40u);
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    EXPECT_EQ(a.runs[i].seed, b.runs[i].seed);
    EXPECT_EQ(a.runs[i].cardinality, b.runs[i].cardinality);
  }
  std::size_t best = a.runs[0].cardinality;
  for (const auto& r : a.runs) best = std::min(best, r.cardinality);
  EXPECT_EQ(a.best_cardinality, best);
  EXPECT_EQ(a.runs[a.best_restart].cardinality, best);
}

TEST(RestartsTest, BestIsNonIncreasingInRestartCount) {
  const Graph g = grid_graph(4, 7);
  std::size_t previous = g.n() + 1;
  for (std::size_t restarts : {1, 2, 5, 10, 30, 60}) {
    auto rep = run_restarts(g, OrderingStrategy::random(0), restarts, 2024);
    EXPECT_LE(rep.best_cardinality, previous);
    previous = rep.best_cardinality;
  }
}

TEST(BenchTest, SlopeFitRecoversPowerLaws) {
  std::vector<double> xs{10, 20, 40, 80}, cubic, square;
  for (double x : xs) {
    cubic.push_back(3 * x * x * x);
    square.push_back(0.5 * x * x);
  }
  EXPECT_NEAR(loglog_slope(xs, cubic), 3.0, 1e-9);
  EXPECT_NEAR(loglog_slope(xs, square), 2.0, 1e-9);
  EXPECT_THROW(loglog_slope(std::vector<double>{1}, std::vector<double>{1}), UsageError);
}

TEST(BenchTest, GridShape) {
  EXPECT_EQ(grid_shape(256), (std::pair<std::size_t, std::size_t>{16, 16}));
  EXPECT_EQ(grid_shape(512), (std::pair<std::size_t, std::size_t>{16, 32}));
  EXPECT_EQ(grid_shape(2048), (std::pair<std::size_t, std::size_t>{32, 64}));
  EXPECT_EQ(grid_shape(13), (std::pair<std::size_t, std::size_t>{1, 13}));
}

TEST(BenchTest, RunsAndReportsCsv) {
  const std::vector<std::string> families{"grid", "hypercube", "cycle"};
  const std::vector<std::size_t> sizes{64, 100, 128};
  const BenchReport report = run_bench(families, sizes, 2, 1);
  // hypercube 100 is skipped (not a power of two).
  EXPECT_TRUE(std::any_of(report.skipped.begin(), report.skipped.end(), [](const auto& s) {
    return s.family == "hypercube" && s.n == 100;
  }));
  EXPECT_EQ(report.fits.size(), 3u);
  for (const auto& s : report.samples) {
    EXPECT_GT(s.dense_work, 0u);
    EXPECT_GT(s.sparse_work, 0u);
  }
  std::ostringstream csv;
  write_bench_csv(csv, report);
  const std::string text = csv.str();
  EXPECT_EQ(text.rfind("record,family,n,max_degree,", 0), 0u);
  EXPECT_NE(text.find("\nsample,grid,64,4,"), std::string::npos);
  EXPECT_NE(text.find("\nfit,cycle,"), std::string::npos);
  EXPECT_NE(text.find("\"hypercube needs a power of two\""), std::string::npos);
  // Every line has the same number of fields.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t fields = 1;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++fields;
    }
    EXPECT_EQ(fields, 15u) << line;
  }
}

TEST(BenchTest, RepeatedInstanceHasIdenticalCounters) {
  const std::vector<std::string> families{"grid"};
  const std::vector<std::size_t> sizes{144};
  auto a = run_bench(families, sizes, 3, 1);
  auto b = run_bench(families, sizes, 1, 1);
  ASSERT_EQ(a.samples.size(), 1u);
  ASSERT_EQ(b.samples.size(), 1u);
  EXPECT_EQ(a.samples[0].dense_work, b.samples[0].dense_work);
  EXPECT_EQ(a.samples[0].sparse_work, b.samples[0].sparse_work);
}

TEST(BenchTest, OrderingRelabelsEachInstance) {
  const std::vector<std::string> families{"grid"};
  const std::vector<std::size_t> sizes{100};
  const auto strategy = OrderingStrategy::random(9);
  auto report = run_bench(families, sizes, 1, 1, strategy);
  ASSERT_EQ(report.samples.size(), 1u);
  const Graph grid = grid_graph(10, 10);
  const Graph relabeled = permute(grid, make_ordering(grid, strategy));
  WorkCounter dense, sparse;
  const RunOutcome out = lex_code_dense(relabeled, &dense);
  lex_code_sparse(relabeled, &sparse);
  EXPECT_EQ(report.samples[0].dense_work, dense.count);
  EXPECT_EQ(report.samples[0].sparse_work, sparse.count);
  EXPECT_EQ(report.samples[0].code_size, out.code().size());
  EXPECT_EQ(report.samples[0].max_degree, 4u);
}

TEST(BenchTest, TwinInstancesAreSkipped) {
  // Path on 2 vertices is K2.
  const std::vector<std::string> families{"path"};
  const std::vector<std::size_t> sizes{2, 16};
  auto report = run_bench(families, sizes, 1, 1);
  ASSERT_EQ(report.skipped.size(), 1u);
  EXPECT_EQ(report.skipped[0].n, 2u);
  EXPECT_EQ(report.samples.size(), 1u);
}

}  // namespace
}  // namespace idcode
