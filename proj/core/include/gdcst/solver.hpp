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

// Front door for the dependency-constrained spanning tree problem: two
// polynomial special cases solved through matroid intersection, and an exact
// branch-and-bound for everything else.

#ifndef GDCST_SOLVER_HPP_
#define GDCST_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "gdcst/graph.hpp"

namespace gdcst {

enum class Verdict { kFeasible, kInfeasible };
enum class SolverPath { kMatchingCase, kPartitionCase, kGeneric, kOracle };

std::string_view verdict_name(Verdict v);
std::string_view solver_path_name(SolverPath p);

struct SearchStats {
  // Generic: terminal search nodes (each covers a disjoint set of edge
  // subsets, so this never exceeds 2^m). Oracle: trees or subsets examined.
  std::int64_t nodes = 0;
  std::int64_t oracle_calls = 0;
  double ms = 0.0;
};

struct SolveReport {
  Verdict verdict = Verdict::kInfeasible;
  std::optional<EdgeSet> witness;
  std::optional<Weight> optimal_weight;  // set only for weighted optimization
  SolverPath path = SolverPath::kGeneric;
  SearchStats stats;

  bool feasible() const { return verdict == Verdict::kFeasible; }
};

// Dispatch: matching case (feasibility only), then partition case, then the
// generic search.
SolveReport solve(const Instance& instance, bool optimize);

// D is a disjoint union of single arcs and isolated vertices, and
// l(e) = u(e) = |dep(e)| everywhere.
bool detect_matching_case(const Instance& instance);
SolveReport solve_matching_case(const Instance& instance);

// l == 0, every weak component of D is a symmetric complete digraph, and u is
// constant on each component.
bool detect_partition_case(const Instance& instance);
SolveReport solve_partition_case(const Instance& instance, bool optimize);

SolveReport solve_generic(const Instance& instance, bool optimize);

// Throws std::logic_error unless the report's witness is a spanning tree that
// satisfies every bound and its weight matches. Infeasible reports pass.
void assert_report_consistent(const Instance& instance,
                              const SolveReport& report);

}  // namespace gdcst

#endif  // GDCST_SOLVER_HPP_
