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

// Brute-force references. Nothing here shares code with the solvers beyond
// the data model and satisfies().

#ifndef GDCST_ORACLE_HPP_
#define GDCST_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gdcst/cnf.hpp"
#include "gdcst/graph.hpp"
#include "gdcst/solver.hpp"
#include "gdcst/source_problems.hpp"

namespace gdcst {

// Deletion-contraction over edge ids in ascending order. Each spanning tree
// is visited exactly once; return false from `visit` to stop early.
// Disconnected graphs yield nothing.
void for_each_spanning_tree(const Graph& graph,
                            const std::function<bool(const EdgeSet&)>& visit);
std::vector<EdgeSet> enumerate_spanning_trees(const Graph& graph);

// Matrix-tree theorem with a fraction-free (Bareiss) determinant.
std::int64_t count_spanning_trees(const Graph& graph);

enum class OracleMode { kTrees, kSubsets };

std::string_view oracle_mode_name(OracleMode mode);

struct OracleOptions {
  OracleMode mode = OracleMode::kTrees;
  int max_edges = 25;
};

// Exact verdict (and optimum when `optimize` and weighted). Trees mode walks
// the spanning trees and cuts a branch as soon as a chosen edge can no longer
// meet its bounds; subsets mode tests all 2^m edge subsets. Path is kOracle;
// stats.nodes counts trees or subsets examined. Throws kCapExceeded when
// m > max_edges.
SolveReport oracle_solve(const Instance& instance, bool optimize,
                         const OracleOptions& options = {});

// Exhaustive assignment search; kCapExceeded above max_vars.
bool brute_sat(const Cnf& cnf, int max_vars = 24);

// Evaluates the source problem's defining predicate on a spanning tree of its
// graph. Throws kNotSpanningTree otherwise.
bool check_source_solution(const SourceProblem& problem, const EdgeSet& tree);

struct SourceOptimum {
  bool feasible = false;
  std::optional<EdgeSet> tree;
  std::optional<Weight> weight;  // weighted problems only
};

// Tree enumeration plus check_source_solution; minimizes weight when the
// problem is weighted and `optimize` is set.
SourceOptimum source_oracle(const SourceProblem& problem, bool optimize,
                            int max_edges = 25);

}  // namespace gdcst

#endif  // GDCST_ORACLE_HPP_
