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
#include <string>

#include "gdcst/cnf.hpp"
#include "gdcst/error.hpp"
#include "gdcst/generators.hpp"
#include "gdcst/io.hpp"
#include "gdcst/oracle.hpp"
#include "gdcst/solver.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gdcst {
namespace {

const Cnf kXorLike{2, {{1, -2}, {-1, 2}}};
const Cnf kAllSigns{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}};

bool feasible(const GeneratedInstance& g) {
  return oracle_solve(g.instance, false, {OracleMode::kTrees, 200}).feasible();
}

void expect_roles_unique(const GeneratedInstance& g) {
  ASSERT_EQ(static_cast<int>(g.edge_roles.size()), g.instance.edge_count());
  const std::set<std::string> seen(g.edge_roles.begin(), g.edge_roles.end());
  EXPECT_EQ(seen.size(), g.edge_roles.size());
}

TEST(Validate322, Examples) {
  EXPECT_TRUE(validate_322(kXorLike));
  EXPECT_FALSE(validate_322(Cnf{4, {{1, 2, 3, 4}}}));
  EXPECT_FALSE(validate_322(Cnf{4, {{1, 2}, {1, 3}, {1, 4}}}));
  EXPECT_FALSE(validate_322(Cnf{2, {{1}}}));
}

TEST(Outstars, CountsAndVerdicts) {
  const GeneratedInstance g = sat_to_gdcst_outstars(kXorLike);
  EXPECT_EQ(g.instance.vertex_count(), 11);
  EXPECT_EQ(g.instance.edge_count(), 14);
  EXPECT_EQ(g.instance.deps().arc_count(), 6);
  expect_roles_unique(g);
  EXPECT_TRUE(brute_sat(kXorLike));
  EXPECT_TRUE(feasible(g));

  EXPECT_FALSE(brute_sat(kAllSigns));
  EXPECT_FALSE(feasible(sat_to_gdcst_outstars(kAllSigns)));
}

TEST(Outstars, Structure) {
  const GeneratedInstance g = sat_to_gdcst_outstars(kAllSigns);
  const StructureReport s = check_structure(g.instance.graph());
  EXPECT_TRUE(s.is_chordal);
  ASSERT_TRUE(s.diameter.has_value());
  EXPECT_LE(*s.diameter, 2);
  EXPECT_TRUE(testing::is_out_star_forest(g.instance));
  EXPECT_EQ(testing::max_out_degree(g.instance), 2);
}

TEST(Outstars, Rejects) {
  try {
    sat_to_gdcst_outstars(Cnf{4, {{1, 2}, {1, 3}, {1, 4}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNot322);
  }
}

TEST(Paths, TwoPositiveOccurrencesBecomeAPath) {
  const Cnf phi{3, {{1, 2}, {1, -3}}};
  const GeneratedInstance stars = sat_to_gdcst_outstars(phi);
  const GeneratedInstance paths = sat_to_gdcst_paths(phi);
  EXPECT_EQ(testing::max_out_degree(stars.instance), 2);
  EXPECT_LE(testing::max_out_degree(paths.instance), 1);
  EXPECT_LE(testing::max_in_degree(paths.instance), 1);
  EXPECT_EQ(paths.instance.deps().arc_count(), stars.instance.deps().arc_count());
  EXPECT_FALSE(paths.notes.empty());
  EXPECT_EQ(feasible(paths), brute_sat(phi));
  expect_roles_unique(paths);
}

TEST(Instars, CountsAndStructure) {
  const GeneratedInstance g = sat_to_gdcst_instars(kXorLike);
  EXPECT_EQ(g.instance.vertex_count(), 23);
  EXPECT_EQ(g.instance.edge_count(), 30);
  EXPECT_TRUE(testing::is_in_star_forest(g.instance));
  EXPECT_LE(testing::max_in_degree(g.instance), 2);
  expect_roles_unique(g);
  EXPECT_TRUE(feasible(g));
  EXPECT_FALSE(feasible(sat_to_gdcst_instars(kAllSigns)));
}

TEST(RandomInstance, Deterministic) {
  GenParams p;
  p.seed = 1;
  p.n = 6;
  p.arc_density = 0.2;
  p.mode = BoundMode::kDep;
  EXPECT_EQ(render_instance(random_instance(p)), render_instance(random_instance(p)));
  p.seed = 2;
  EXPECT_EQ(random_instance(p).edge_count(), p.m);
  EXPECT_EQ(component_count(random_instance(p).graph()), 1);
}

TEST(RandomInstance, Modes) {
  GenParams p;
  p.n = 6;
  p.m = 9;
  p.arc_density = 0;
  const Instance empty = random_instance(p);
  EXPECT_EQ(empty.deps().arc_count(), 0);
  EXPECT_TRUE(solve(empty, false).feasible());

  p.arc_density = 0.4;
  p.mode = BoundMode::kZero;
  const Instance zero = random_instance(p);
  for (EdgeId e = 0; e < zero.edge_count(); ++e) {
    EXPECT_EQ(zero.lower(e), 0);
    EXPECT_EQ(zero.upper(e), 0);
  }
  p.mode = BoundMode::kDep;
  const Instance dep = random_instance(p);
  for (EdgeId e = 0; e < dep.edge_count(); ++e) {
    EXPECT_EQ(dep.lower(e), static_cast<int>(dep.dep(e).size()));
  }
  p.n = 4;
  p.m = 7;
  EXPECT_THROW(random_instance(p), Error);
}

TEST(RandomFamilies, DetectedShapes) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    EXPECT_TRUE(detect_matching_case(random_matching_instance(6, 9, 3, seed, true)));
    const Instance part = random_partition_instance(6, 9, seed);
    EXPECT_TRUE(detect_partition_case(part));
    EXPECT_TRUE(part.is_weighted());
  }
}

TEST(Cnf322, RandomAndCorpus) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_TRUE(validate_322(random_322_cnf(4, 5, seed)));
  }
  const auto all = small_322_corpus(2, 2, false);
  const auto canon = small_322_corpus(2, 2, true);
  EXPECT_FALSE(canon.empty());
  EXPECT_LT(canon.size(), all.size());
  for (const Cnf& c : all) EXPECT_TRUE(validate_322(c));
}

}  // namespace
}  // namespace gdcst
