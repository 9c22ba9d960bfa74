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

// Classical constrained spanning tree problems that embed into G-DCST.
//
//   ccst    no conflict pair has both edges in the tree
//   fcst    every forcing pair has at least one edge in the tree
//   mdst    deg_T(v) <= upper[v]
//   mindeg  lower[v] <= deg_T(v) <= upper[v] for every nonleaf v
//   fmdst   deg_T(v) >= lower[v] for v in C, deg_T(v) == 1 otherwise

#ifndef GDCST_SOURCE_PROBLEMS_HPP_
#define GDCST_SOURCE_PROBLEMS_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gdcst/graph.hpp"

namespace gdcst {

enum class SourceKind { kCcst, kFcst, kMdst, kMinDegree, kFmdst };

std::string_view source_kind_token(SourceKind kind);
std::optional<SourceKind> parse_source_kind(std::string_view token);

using EdgePair = std::pair<EdgeId, EdgeId>;

struct SourceProblem {
  SourceKind kind = SourceKind::kCcst;
  Graph graph;
  std::optional<Weights> weights;
  std::vector<EdgePair> pairs;  // ccst conflicts, fcst forcing pairs
  std::vector<int> lower;       // per vertex; mindeg, fmdst
  std::vector<int> upper;       // per vertex; mdst, mindeg
  std::vector<bool> in_c;       // fmdst

  friend bool operator==(const SourceProblem&, const SourceProblem&) = default;
};

// Range and length checks for the fields the kind uses.
void check_source_problem(const SourceProblem& problem);

}  // namespace gdcst

#endif  // GDCST_SOURCE_PROBLEMS_HPP_
