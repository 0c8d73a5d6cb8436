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

#include "idcode/baselines.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "idcode/errors.hpp"
#include "idcode/generators.hpp"
#include "idcode/lex_dense.hpp"
#include "oracles.hpp"

namespace idcode {
namespace {

Graph P3() { return Graph(3, {{1, 2}, {2, 3}}); }
Graph K2() { return Graph(2, {{1, 2}}); }

TEST(MinimumCodeTest, Examples) {
  auto single = minimum_code(Graph(1, {}));
  EXPECT_EQ(single.code, Code{1});
  EXPECT_EQ(single.cardinality, 1u);

  auto p3 = minimum_code(P3());
  EXPECT_EQ(p3.code, (Code{1, 3}));
  EXPECT_EQ(p3.cardinality, 2u);

  // Frozen from an independent subset enumeration: i = 4, first witness
  // {2,3,4,7}.
  auto fig = minimum_code(nonminimal_fixture());
  EXPECT_LE(fig.cardinality, 5u);
  EXPECT_EQ(fig.cardinality, 4u);
  EXPECT_EQ(fig.code, (Code{2, 3, 4, 7}));

  auto p5 = minimum_code(path_graph(5));
  EXPECT_EQ(p5.code, (Code{1, 3, 5}));
}

TEST(MinimumCodeTest, Errors) {
  try {
    minimum_code(K2());
    FAIL() << "expected TwinError";
  } catch (const TwinError& e) {
    EXPECT_EQ(e.twins(), (TwinFailure{1, 2}));
  }
  EXPECT_THROW(minimum_code(path_graph(25)), UsageError);
  EXPECT_THROW(minimum_code(path_graph(10), 8), UsageError);
  EXPECT_NO_THROW(minimum_code(path_graph(10), 10));
}

TEST(MinimumCodeTest, IsMinimumByExhaustion) {
  int checked = 0;
  for (const auto& g : oracle::corpus(150, 12, 71)) {
    if (find_twins(g)) continue;
    const auto result = minimum_code(g);
    EXPECT_EQ(result.code.size(), result.cardinality);
    EXPECT_TRUE(oracle::is_identifying(g, result.code));
    EXPECT_EQ(result.cardinality, oracle::minimum_cardinality(g));
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(MinimalizeTest, Examples) {
  EXPECT_EQ(minimalize(nonminimal_fixture(), Code{1, 2, 3, 4, 5, 6}), (Code{2, 3, 4, 5, 6}));
  EXPECT_EQ(minimalize(Graph(1, {}), Code{1}), Code{1});
  EXPECT_EQ(minimalize(P3(), Code{1, 2, 3}), (Code{1, 3}));
  EXPECT_THROW(minimalize(P3(), Code{2}), UsageError);
}

TEST(MinimalizeTest, ResultIsMinimalSubset) {
  for (const auto& g : oracle::corpus(200, 30, 73)) {
    if (find_twins(g)) continue;
    const Code input = lex_code_dense(g).code();
    const Code out = minimalize(g, input);
    EXPECT_TRUE(out.is_subset_of(input));
    EXPECT_TRUE(oracle::is_identifying(g, out));
    for (Vertex v : out) EXPECT_FALSE(oracle::is_identifying(g, out.without(v)));
  }
}

TEST(GreedyCodeTest, Examples) {
  EXPECT_EQ(greedy_code(P3()), RunOutcome(Code{1, 3}));
  EXPECT_EQ(greedy_code(K2()), RunOutcome(TwinFailure{1, 2}));
  EXPECT_EQ(greedy_code(Graph(1, {})), RunOutcome(Code{1}));
  // Frozen from a literal set-cover greedy over explicit universe elements.
  EXPECT_EQ(greedy_code(path_graph(5)), RunOutcome(Code{2, 3, 4}));
  EXPECT_EQ(greedy_code(nonminimal_fixture()), RunOutcome(Code{2, 3, 4, 7}));
}

TEST(GreedyCodeTest, MatchesExplicitUniverseGreedy) {
  for (const auto& g : oracle::corpus(200, 20, 83)) {
    ASSERT_EQ(greedy_code(g), oracle::greedy_reference(g));
  }
}

TEST(GreedyCodeTest, ValidAndNeverBelowMinimum) {
  for (const auto& g : oracle::corpus(300, 16, 79)) {
    const RunOutcome greedy = greedy_code(g);
    const auto twins = find_twins(g);
    ASSERT_EQ(greedy.is_twin_failure(), twins.has_value());
    if (twins) {
      EXPECT_EQ(greedy.twins(), *twins);
      continue;
    }
    EXPECT_TRUE(oracle::is_identifying(g, greedy.code()));
    const auto minimum = minimum_code(g);
    EXPECT_LE(minimum.cardinality, greedy.code().size());
    const Code lex = lex_code_dense(g).code();
    EXPECT_LE(minimum.cardinality, minimalize(g, lex).size());
    EXPECT_LE(minimalize(g, lex).size(), lex.size());
  }
}

}  // namespace
}  // namespace idcode
