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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "idcode/errors.hpp"
#include "idcode/generators.hpp"
#include "oracles.hpp"

namespace idcode {
namespace {

Graph P3() { return Graph(3, {{1, 2}, {2, 3}}); }
Graph K2() { return Graph(2, {{1, 2}}); }

TEST(Min1Test, Examples) {
  EXPECT_EQ(min1(Graph(3, {}).matrix(), 2), 2u);
  EXPECT_EQ(min1(P3().matrix(), 2), 1u);
  EXPECT_EQ(min1(nonminimal_fixture().matrix(), 6), 4u);
}

TEST(Min1Test, NeverExceedsItsVertex) {
  for (const auto& g : oracle::corpus(100, 70, 31)) {
    auto closed = oracle::closed_sets(g);
    for (Vertex j = 1; j <= g.n(); ++j) {
      EXPECT_EQ(min1(g.matrix(), j), *closed[j].begin());
      EXPECT_LE(min1(g.matrix(), j), j);
    }
  }
}

TEST(Min2Test, Examples) {
  EXPECT_EQ(min2(K2().matrix(), 2, 1), 3u);
  EXPECT_EQ(min2(P3().matrix(), 2, 1), 3u);
  EXPECT_EQ(min2(nonminimal_fixture().matrix(), 8, 7), 6u);
  EXPECT_THROW(min2(P3().matrix(), 4, 1), UsageError);
}

TEST(Min2Test, EqualsBruteForceSymmetricDifferenceOnEveryPair) {
  // n up to 130 so rows span several words.
  for (const auto& g : oracle::corpus(80, 130, 37)) {
    auto closed = oracle::closed_sets(g);
    for (Vertex j = 1; j <= g.n(); ++j) {
      for (Vertex k = 1; k <= g.n(); ++k) {
        if (j == k) continue;
        ASSERT_EQ(min2(g.matrix(), j, k), oracle::min_symmetric_difference(closed, j, k))
            << "n=" << g.n() << " j=" << j << " k=" << k;
      }
    }
  }
}

TEST(LexDenseTest, Examples) {
  EXPECT_EQ(lex_code_dense(nonminimal_fixture()), RunOutcome(Code{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(lex_code_dense(Graph(1, {})), RunOutcome(Code{1}));
  EXPECT_EQ(lex_code_dense(P3()), RunOutcome(Code{1, 3}));
  EXPECT_EQ(lex_code_dense(K2()), RunOutcome(TwinFailure{1, 2}));
}

TEST(LexDenseTest, MatchesSetReferenceAndTwinDetection) {
  for (const auto& g : oracle::corpus(400, 64, 41)) {
    const RunOutcome out = lex_code_dense(g);
    ASSERT_EQ(out, oracle::lex_reference(g));
    const auto twins = find_twins(g);
    ASSERT_EQ(out.is_twin_failure(), twins.has_value());
    if (twins) {
      EXPECT_EQ(out.twins(), *twins);
    } else {
      EXPECT_TRUE(oracle::is_identifying(g, out.code()));
      EXPECT_LE(out.code().size(), g.n());
    }
  }
}

TEST(LexDenseTest, StepInvariants) {
  for (const auto& g : oracle::corpus(150, 40, 43)) {
    if (find_twins(g)) continue;
    auto closed = oracle::closed_sets(g);
    DenseLexBuilder builder(g.matrix());
    std::vector<std::vector<Vertex>> previous(g.n() + 1);
    while (!builder.done()) {
      const Vertex j = builder.next_vertex();
      builder.step();
      const auto& x = builder.coverage();
      const auto cw = builder.codewords();
      oracle::VertexSet code(cw.begin(), cw.end());
      std::set<std::vector<Vertex>> seen;
      for (Vertex a = 1; a <= g.n(); ++a) {
        const auto support = x.support(a);
        // supp(X(a)) = N(a) ∩ C.
        auto expect = oracle::trace(closed[a], code);
        ASSERT_EQ(support, std::vector<Vertex>(expect.begin(), expect.end()));
        // Supports only grow.
        ASSERT_TRUE(std::includes(support.begin(), support.end(),
                                  previous[a].begin(), previous[a].end()));
        previous[a] = support;
        if (a <= j) {
          // Rows 1..j nonzero and pairwise distinct.
          ASSERT_FALSE(support.empty()) << "row " << a << " after step " << j;
          ASSERT_TRUE(seen.insert(support).second) << "row " << a << " after step " << j;
        }
      }
      // Column l nonzero only for codewords, and then equal to column l of B.
      for (Vertex l = 1; l <= g.n(); ++l) {
        for (Vertex a = 1; a <= g.n(); ++a) {
          ASSERT_EQ(x.at(a, l), code.count(l) == 1 && g.matrix().at(a, l));
        }
      }
    }
  }
}

TEST(LexDenseTest, FailureStopsEarly) {
  // Twins at (1, 2); vertices after 2 are never processed.
  Graph g(5, {{1, 2}, {3, 4}, {4, 5}});
  DenseLexBuilder builder(g.matrix());
  while (!builder.done()) builder.step();
  EXPECT_EQ(builder.failure(), (TwinFailure{1, 2}));
  EXPECT_EQ(builder.outcome(), RunOutcome(TwinFailure{1, 2}));
}

TEST(LexDenseTest, WorkCounterIsDeterministic) {
  const Graph g = grid_graph(12, 12);
  WorkCounter first, second;
  lex_code_dense(g, &first);
  lex_code_dense(g, &second);
  EXPECT_GT(first.count, 0u);
  EXPECT_EQ(first.count, second.count);
}

TEST(DenseCoverageStateTest, RowComparisonCostsFullRow) {
  const Graph g = path_graph(70);
  DenseCoverageState x(g.n());
  x.insert_codeword(g.matrix(), 1);
  WorkCounter work;
  EXPECT_FALSE(x.rows_equal(1, 3, &work));
  EXPECT_TRUE(x.rows_equal(3, 70, &work));
  EXPECT_EQ(work.count, 140u);
}

}  // namespace
}  // namespace idcode
