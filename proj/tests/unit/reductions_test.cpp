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
#include <set>
#include <vector>

#include "gdcst/error.hpp"
#include "gdcst/generators.hpp"
#include "gdcst/oracle.hpp"
#include "gdcst/reductions.hpp"
#include "gdcst/solver.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gdcst {
namespace {

using testing::complete_graph;
using testing::path_graph;
using testing::star_graph;

Instance tri1_bounds(int lo, int hi) {
  const Instance t = testing::tri1();
  Bounds b = Bounds::zeros(3);
  b.lower[1] = lo;
  b.upper[1] = hi;
  return build_instance(t.graph(), t.deps(), b, t.weights());
}

// Source edge sets of all valid trees of the output instance.
std::set<std::vector<EdgeId>> pulled_back_trees(const ReductionOutput& out) {
  std::set<std::vector<EdgeId>> got;
  for (const EdgeSet& t : enumerate_spanning_trees(out.instance.graph())) {
    if (!satisfies(out.instance, t).pass()) continue;
    const EdgeSet s = pull_back(out, t);
    got.insert(std::vector<EdgeId>(s.begin(), s.end()));
  }
  return got;
}

void audit(const ReductionOutput& out) {
  const EdgeSet b = bridges(out.instance.graph());
  for (EdgeId e : out.forced_edges) EXPECT_TRUE(b.contains(e)) << e;
  EXPECT_EQ(static_cast<int>(out.edge_roles.size()), out.instance.edge_count());
}

bool feasible(const ReductionOutput& out) { return solve(out.instance, false).feasible(); }

TEST(Lift, CountsWithUnitBounds) {
  const Instance t = tri1_bounds(1, 1);
  const ReductionOutput out = lift_bounds(t, 1);
  EXPECT_EQ(out.instance.vertex_count(), 3 + 3);
  EXPECT_EQ(out.instance.edge_count(), 3 + 3);
  for (EdgeId e = 3; e < 6; ++e) EXPECT_EQ(out.instance.dep(e).size(), 2u);
  EXPECT_EQ(out.instance.dep(1).size(), 2u);
  EXPECT_EQ(out.instance.lower(1), 2);
  EXPECT_EQ(out.instance.upper(1), 2);
  EXPECT_EQ(out.forced_edges, (EdgeSet{3, 4, 5}));
  audit(out);
  EXPECT_EQ(oracle_solve(t, false).verdict, oracle_solve(out.instance, false).verdict);
}

TEST(Lift, CountsWithZeroBounds) {
  const Instance t = tri1_bounds(0, 0);
  const ReductionOutput out = lift_bounds(t, 2);
  EXPECT_EQ(out.instance.vertex_count(), 3 + 3);
  EXPECT_EQ(out.instance.edge_count(), 3 + 3);
  EXPECT_EQ(out.instance.dep(1).size(), t.dep(1).size() + 2);
  EXPECT_TRUE(out.instance.dep(0).empty());
  audit(out);
}

TEST(Lift, Errors) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  Bounds b{{0, 1, 0}, {1, 1, 1}};
  const Instance mixed = build_instance(g, DepDigraph(3, {{0, 1}, {1, 2}}), b);
  try {
    lift_bounds(mixed, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonConstantBounds);
  }
  EXPECT_THROW(lift_bounds(testing::tri1(), 0), Error);
}

TEST(Ccst, Counts) {
  const ReductionOutput out = from_ccst(complete_graph(3), {{0, 1}}, 2, 7);
  EXPECT_EQ(out.instance.vertex_count(), 3 + 1 + 6);
  EXPECT_EQ(out.instance.edge_count(), 3 + 1 + 6);
  EXPECT_EQ(out.seed, 7u);
  audit(out);
}

TEST(Ccst, ConflictAvoided) {
  const ReductionOutput out = from_ccst(complete_graph(3), {{0, 1}}, 0, 1);
  EXPECT_EQ(pulled_back_trees(out),
            (std::set<std::vector<EdgeId>>{{0, 2}, {1, 2}}));
}

TEST(Fcst, ForcingPair) {
  const ReductionOutput out = from_fcst(complete_graph(3), {{0, 1}});
  EXPECT_EQ(pulled_back_trees(out),
            (std::set<std::vector<EdgeId>>{{0, 1}, {0, 2}, {1, 2}}));
  audit(out);
  const ReductionOutput none = from_fcst(complete_graph(4), {});
  EXPECT_TRUE(feasible(none));
}

TEST(Mdst, Star) {
  EXPECT_TRUE(feasible(from_mdst(star_graph(3), {3, 3, 3, 3})));
  EXPECT_FALSE(feasible(from_mdst(star_graph(3), {2, 3, 3, 3})));
  EXPECT_TRUE(feasible(from_mdst(path_graph(4), {2, 2, 2, 2})));
  EXPECT_THROW(from_mdst(path_graph(3), {0, 2, 2}), Error);
}

TEST(MinDegree, Examples) {
  const ReductionOutput p3 = from_min_degree(path_graph(3), {2, 2, 2}, {2, 2, 2});
  EXPECT_TRUE(feasible(p3));
  audit(p3);
  EXPECT_TRUE(feasible(from_min_degree(complete_graph(4), {3, 3, 3, 3}, {3, 3, 3, 3})));
  EXPECT_THROW(from_min_degree(Graph(3, {{0, 1}}), {1, 1, 1}, {1, 1, 1}), Error);
}

TEST(Fmdst, Examples) {
  EXPECT_TRUE(feasible(from_fmdst(star_graph(3), {true, false, false, false}, {3, 0, 0, 0})));
  EXPECT_TRUE(feasible(from_fmdst(path_graph(3), {false, true, false}, {0, 2, 0})));
  EXPECT_FALSE(feasible(from_fmdst(path_graph(3), {true, false, false}, {2, 0, 0})));
}

TEST(PullBack, IdentityAndRejection) {
  const ReductionOutput out = from_mdst(star_graph(3), {3, 3, 3, 3});
  const SolveReport r = solve(out.instance, false);
  ASSERT_TRUE(r.feasible());
  const EdgeSet src = pull_back(out, *r.witness);
  ASSERT_EQ(out.forced_edges.size(), out.instance.edge_count() - out.source_edge_count);
  EXPECT_EQ(r.witness->size(), src.size() + out.forced_edges.size());
  try {
    pull_back(out, EdgeSet{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidWitness);
  }
}

TEST(Reduce, KeepsSourceIds) {
  for (SourceKind kind : {SourceKind::kCcst, SourceKind::kFcst, SourceKind::kMdst,
                          SourceKind::kMinDegree, SourceKind::kFmdst}) {
    const SourceProblem p = random_source_problem(kind, 5, 7, 2, 3, true);
    const ReductionOutput out = reduce(p);
    ASSERT_EQ(out.source_edge_count, 7);
    for (EdgeId e = 0; e < 7; ++e) {
      const Edge& a = p.graph.edge(e);
      const Edge& b = out.instance.graph().edge(e);
      EXPECT_EQ(out.vertex_map[static_cast<size_t>(a.u)], b.u);
      EXPECT_EQ(out.vertex_map[static_cast<size_t>(a.v)], b.v);
      EXPECT_EQ(out.instance.weight(e), (*p.weights)[static_cast<size_t>(e)]);
    }
    audit(out);
  }
}

TEST(Reduce, SmallEquivalence) {
  for (SourceKind kind : {SourceKind::kCcst, SourceKind::kFcst, SourceKind::kMdst,
                          SourceKind::kMinDegree, SourceKind::kFmdst}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const int k = kind == SourceKind::kMdst ? 2 : 2 + static_cast<int>(seed % 2);
      const SourceProblem p = random_source_problem(kind, 5, 7, k, seed, true);
      const ReductionOutput out = reduce(p, {1, seed});
      const SourceOptimum want = source_oracle(p, true);
      const SolveReport got = solve(out.instance, true);
      ASSERT_EQ(got.feasible(), want.feasible) << source_kind_token(kind) << " " << seed;
      if (!got.feasible()) continue;
      EXPECT_EQ(got.optimal_weight, want.weight);
      EXPECT_TRUE(check_source_solution(p, pull_back(out, *got.witness)));
    }
  }
}

TEST(Tokens, RoundTrip) {
  for (ReductionKind k : {ReductionKind::kLift, ReductionKind::kCcst, ReductionKind::kFcst,
                          ReductionKind::kMdst, ReductionKind::kMinDegree,
                          ReductionKind::kFmdst}) {
    EXPECT_EQ(parse_reduction_kind(reduction_kind_token(k)), k);
  }
  EXPECT_FALSE(parse_reduction_kind("nope").has_value());
}

}  // namespace
}  // namespace gdcst
