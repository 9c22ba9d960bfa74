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

// Instance emitters: (3,2,2)-SAT encodings and seeded random families.

#ifndef GDCST_GENERATORS_HPP_
#define GDCST_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gdcst/cnf.hpp"
#include "gdcst/graph.hpp"
#include "gdcst/source_problems.hpp"

namespace gdcst {

struct GeneratedInstance {
  Instance instance;
  std::vector<std::string> edge_roles;  // one tag per edge
  std::vector<std::string> notes;
};

// Universal vertex 0; per variable x the triangle v v_x v_x̄ plus pendant w_x;
// per clause a path over its literal vertices. Arcs (v_x v_x̄ -> v w_x) and
// (v v_lit -> v v_c^i). D is a forest of out-stars. Throws kNot322.
GeneratedInstance sat_to_gdcst_outstars(const Cnf& cnf);

// Same graph; a two-leaf out-star v v_lit -> {a, b} becomes the path
// v v_lit -> a -> b where a belongs to the clause with the lower index.
GeneratedInstance sat_to_gdcst_paths(const Cnf& cnf);

// Literal gadgets {v_c, a_c, b_c, w_c} per clause literal with arcs
// (a b -> v w), (v a -> v v_c), (v b -> v v_{negated literal}). D is a forest
// of in-stars. Edges are numbered variable by variable.
GeneratedInstance sat_to_gdcst_instars(const Cnf& cnf);

enum class SatVariant { kOutstars, kPaths, kInstars };
std::string_view sat_variant_token(SatVariant v);
GeneratedInstance sat_to_gdcst(const Cnf& cnf, SatVariant variant);

// Deterministic across platforms: all draws go through these helpers.
using Rng = std::mt19937_64;
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);  // [0, bound)
int uniform_int(Rng& rng, int lo, int hi);                   // [lo, hi]
double uniform_unit(Rng& rng);                               // [0, 1)

enum class BoundMode { kZero, kDep, kRandom };
std::string_view bound_mode_token(BoundMode mode);

struct GenParams {
  int n = 6;
  int m = 8;
  double arc_density = 0.2;   // probability of each ordered edge pair
  BoundMode mode = BoundMode::kDep;
  std::uint64_t seed = 1;
  bool weighted = false;
  Weight max_weight = 20;     // weights uniform in [1, max_weight]
};

// Connected simple graph with exactly m edges (resampled until connected),
// then arcs and bounds:
//   zero    ℓ = u = 0
//   dep     ℓ = u = |dep(e)|
//   random  ℓ <= u <= |dep(e)| uniformly
// kUnreachableTarget when no connected graph fits the budget.
Instance random_instance(const GenParams& params);

// Connected graph of exactly m edges drawn from `rng`.
Graph random_connected_graph(int n, int m, Rng& rng);

// D is an oriented matching of `arcs` single arcs (fewer if m is small);
// ℓ = u = |dep|.
Instance random_matching_instance(int n, int m, int arcs, std::uint64_t seed,
                                  bool weighted);

// D is a union of symmetric complete digraphs on disjoint random edge sets of
// size 2..4, u uniform per clique, ℓ = 0; always weighted.
Instance random_partition_instance(int n, int m, std::uint64_t seed);

// (3,2,2) formula with the given shape; clauses of width 2 or 3.
Cnf random_322_cnf(int variables, int clauses, std::uint64_t seed);

// Every multiset of 2- and 3-literal clauses over 1..max_vars variables with
// 1..max_clauses clauses that passes validate_322. With `canonical_only`, one
// representative per orbit of variable renaming and sign flipping is kept.
std::vector<Cnf> small_322_corpus(int max_vars, int max_clauses, bool canonical_only);

// Random source problem on a connected graph with n vertices and m edges.
// `k` is the number of pairs (ccst, fcst), the uniform degree cap (mdst) or
// the uniform lower bound (mindeg; fmdst caps it at each degree). fmdst puts
// each vertex in C with probability 1/2.
SourceProblem random_source_problem(SourceKind kind, int n, int m, int k,
                                    std::uint64_t seed, bool weighted);

}  // namespace gdcst

#endif  // GDCST_GENERATORS_HPP_
