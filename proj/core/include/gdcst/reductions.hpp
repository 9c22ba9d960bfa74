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

// Gadget constructions embedding constrained spanning tree problems into
// G-DCST. Source edges keep their ids and come first; added edges weigh 0.
// Pendant gadgets hang off vertex 0.

#ifndef GDCST_REDUCTIONS_HPP_
#define GDCST_REDUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdcst/graph.hpp"
#include "gdcst/source_problems.hpp"

namespace gdcst {

enum class ReductionKind { kLift, kCcst, kFcst, kMdst, kMinDegree, kFmdst };

std::string_view reduction_kind_token(ReductionKind kind);
std::optional<ReductionKind> parse_reduction_kind(std::string_view token);

struct ReductionOutput {
  Instance instance;
  ReductionKind kind = ReductionKind::kLift;
  std::vector<VertexId> vertex_map;     // source vertex -> output vertex
  int source_edge_count = 0;            // output edges [0, k) are the source's
  std::vector<std::string> edge_roles;  // one tag per output edge
  EdgeSet forced_edges;                 // bridges of the output graph
  std::uint64_t seed = 0;               // orientation seed (ccst)
};

// ℓ and u must be constant over edges with a nonempty dependency set (u
// compared after clamping to |dep|). Those edges get (ℓ+c, u+c); dep-free
// source edges keep (0, 0) and receive no new arcs. c >= 1.
// Errors: kNonConstantBounds, kInvalidArgument.
ReductionOutput lift_bounds(const Instance& instance, int c);

// Conflicts become (seeded) arcs; every source edge also depends on c
// pendant edges, giving bounds (0, c). c >= 0.
ReductionOutput from_ccst(const Graph& graph, const std::vector<EdgePair>& conflicts,
                          int c, std::uint64_t seed,
                          const std::optional<Weights>& weights = std::nullopt);

// One pendant p per forcing pair {e, e'}: arcs e -> p, e' -> p, bounds (1, 2).
ReductionOutput from_fcst(const Graph& graph, const std::vector<EdgePair>& forcing,
                          const std::optional<Weights>& weights = std::nullopt);

// Copy vertex v' per v; vv' depends on the edges at v with bounds (0, dstar).
// kInfeasibleDegreeCap for dstar(v) < 1 when n >= 2.
ReductionOutput from_mdst(const Graph& graph, const std::vector<int>& dstar,
                          const std::optional<Weights>& weights = std::nullopt);

// Gadget {vv1, vv2, v1v3, v2v3} per vertex. A vertex with lv(v) above
// deg_G(v) or uv(v) can only be a leaf and gets no vv1. Isolated vertices
// are rejected.
ReductionOutput from_min_degree(const Graph& graph, const std::vector<int>& lv,
                                const std::vector<int>& uv,
                                const std::optional<Weights>& weights = std::nullopt);

// As from_min_degree with vv2 removed for v in C and vv1 removed otherwise;
// vv1 has bounds (lv(v), deg_G(v)). If lv(v) > deg_G(v) for some v in C the
// gadget of v is unsatisfiable.
ReductionOutput from_fmdst(const Graph& graph, const std::vector<bool>& in_c,
                           const std::vector<int>& lv,
                           const std::optional<Weights>& weights = std::nullopt);

struct ReduceOptions {
  int c = 1;
  std::uint64_t seed = 0;
};

ReductionOutput reduce(const SourceProblem& problem, const ReduceOptions& options = {});

// Validates `witness` against the output instance (kInvalidWitness) and
// returns its source edges.
EdgeSet pull_back(const ReductionOutput& output, const EdgeSet& witness);

}  // namespace gdcst

#endif  // GDCST_REDUCTIONS_HPP_
