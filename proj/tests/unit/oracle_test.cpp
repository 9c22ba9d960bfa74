// Copyright 2026 The Authors.
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


#include <cstdint>

#include "gdcst/error.hpp"
#include "gdcst/generators.hpp"
#include "gdcst/oracle.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gdcst {
namespace {

using testing::complete_graph;
using testing::path_graph;
using testing::star_graph;

TEST(Enumerate, SmallGraphs) {
  EXPECT_EQ(enumerate_spanning_trees(complete_graph(3)).size(), 3u);
  EXPECT_EQ(enumerate_spanning_trees(complete_graph(4)).size(), 16u);
  EXPECT_EQ(enumerate_spanning_trees(path_graph(4)).size(), 1u);
  EXPECT_TRUE(enumerate_spanning_trees(Graph(3, {{0, 1}})).empty());
  EXPECT_EQ(count_spanning_trees(complete_graph(7)), 16807);
}

TEST(Enumerate, EveryTreeValidAndDistinct) {
  const auto trees = enumerate_spanning_trees(complete_graph(5));
  EXPECT_EQ(trees.size(), 125u);
  for (size_t i = 0; i < trees.size(); ++i) {
    EXPECT_TRUE(is_spanning_tree(complete_graph(5), trees[i]));
    if (i > 0) EXPECT_NE(trees[i], trees[i - 1]);
  }
}

TEST(Enumerate, KirchhoffCrossCheck) {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    const int n = uniform_int(rng, 2, 7);
    const int max_m = n * (n - 1) / 2;
    const int m = uniform_int(rng, n - 1, max_m);
    const Graph g = random_connected_graph(n, m, rng);
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_spanning_trees(g).size()),
              count_spanning_trees(g));
  }
  EXPECT_EQ(count_spanning_trees(Graph(4, {{0, 1}, {2, 3}})), 0);
}

TEST(OracleSolve, Examples) {
  SolveReport r = oracle_solve(testing::tri1(), true);
  EXPECT_TRUE(r.feasible());
  EXPECT_EQ(r.optimal_weight, 6);
  EXPECT_EQ(r.path, SolverPath::kOracle);
  EXPECT_FALSE(oracle_solve(testing::bridge1(), false).feasible());
  EXPECT_FALSE(
      oracle_solve(testing::bridge1(), false, {OracleMode::kSubsets, 25}).feasible());
}

TEST(OracleSolve, UnconstrainedIsMst) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams p;
    p.n = 6;
    p.m = 10;
    p.arc_density = 0;
    p.weighted = true;
    p.seed = seed;
    const Instance inst = random_instance(p);
    EXPECT_EQ(oracle_solve(inst, true).optimal_weight,
              testing::kruskal_weight(inst.graph(), *inst.weights()));
  }
}

TEST(OracleSolve, TreesAndSubsetsAgree) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams p;
    p.n = 5 + static_cast<int>(seed % 3);
    p.m = std::min(12, p.n * (p.n - 1) / 2);
    p.arc_density = 0.25;
    p.mode = static_cast<BoundMode>(seed % 3);
    p.weighted = true;
    p.seed = seed;
    const Instance inst = random_instance(p);
    const SolveReport a = oracle_solve(inst, true, {OracleMode::kTrees, 25});
    const SolveReport b = oracle_solve(inst, true, {OracleMode::kSubsets, 25});
    EXPECT_EQ(a.verdict, b.verdict) << seed;
    EXPECT_EQ(a.optimal_weight, b.optimal_weight) << seed;
  }
}

TEST(OracleSolve, CapExceeded) {
  GenParams p;
  p.n = 8;
  p.m = 14;
  try {
    oracle_solve(random_instance(p), false, {OracleMode::kTrees, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(BruteSat, Examples) {
  EXPECT_TRUE(brute_sat(Cnf{2, {{1, 2}}}));
  EXPECT_FALSE(brute_sat(Cnf{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}}));
  EXPECT_TRUE(brute_sat(Cnf{3, {}}));
}

TEST(SourceChecker, Examples) {
  SourceProblem ccst;
  ccst.kind = SourceKind::kCcst;
  ccst.graph = complete_graph(3);
  ccst.pairs = {{0, 1}};
  EXPECT_TRUE(check_source_solution(ccst, {0, 2}));
  EXPECT_FALSE(check_source_solution(ccst, {0, 1}));

  SourceProblem mdst;
  mdst.kind = SourceKind::kMdst;
  mdst.graph = star_graph(3);
  mdst.upper = {2, 2, 2, 2};
  EXPECT_FALSE(check_source_solution(mdst, {0, 1, 2}));

  SourceProblem fmdst;
  fmdst.kind = SourceKind::kFmdst;
  fmdst.graph = star_graph(3);
  fmdst.in_c = {true, false, false, false};
  fmdst.lower = {3, 0, 0, 0};
  EXPECT_TRUE(check_source_solution(fmdst, {0, 1, 2}));

  EXPECT_THROW(check_source_solution(ccst, {0}), Error);
}

TEST(SourceOracle, StarCaps) {
  SourceProblem mdst;
  mdst.kind = SourceKind::kMdst;
  mdst.graph = star_graph(3);
  mdst.upper = {3, 3, 3, 3};
  EXPECT_TRUE(source_oracle(mdst, false).feasible);
  mdst.upper[0] = 2;
  EXPECT_FALSE(source_oracle(mdst, false).feasible);
}

}  // namespace
}  // namespace gdcst
