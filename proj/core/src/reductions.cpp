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

#include "gdcst/reductions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "gdcst/error.hpp"

namespace gdcst {

std::string_view reduction_kind_token(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kLift: return "lift";
    case ReductionKind::kCcst: return "ccst";
    case ReductionKind::kFcst: return "fcst";
    case ReductionKind::kMdst: return "mdst";
    case ReductionKind::kMinDegree: return "mindeg";
    case ReductionKind::kFmdst: return "fmdst";
  }
  return "unknown";
}

std::optional<ReductionKind> parse_reduction_kind(std::string_view token) {
  for (ReductionKind k :
       {ReductionKind::kLift, ReductionKind::kCcst, ReductionKind::kFcst,
        ReductionKind::kMdst, ReductionKind::kMinDegree, ReductionKind::kFmdst}) {
    if (reduction_kind_token(k) == token) return k;
  }
  return std::nullopt;
}

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

std::string vtag(const char* role, int v) { return std::string(role) + ":v" + std::to_string(v); }
std::string etag(const char* role, int e) { return std::string(role) + ":e" + std::to_string(e); }

// Accumulates the output graph; source edges are copied in first.
class Builder {
 public:
  Builder(const Graph& source, const std::optional<Weights>& weights)
      : n_(source.vertex_count()), source_m_(source.edge_count()), weighted_(weights) {
    if (weights && static_cast<int>(weights->size()) != source_m_) {
      throw Error(ErrorCode::kSizeMismatch, "one weight per source edge required");
    }
    for (EdgeId e = 0; e < source_m_; ++e) {
      add_edge(source.edge(e).u, source.edge(e).v, "source", 0, 0,
               weights ? (*weights)[idx(e)] : 0);
    }
  }

  VertexId add_vertex() { return n_++; }

  EdgeId add_edge(VertexId u, VertexId v, std::string role, int lo, int hi,
                  Weight w = 0) {
    edges_.push_back(Edge{u, v});
    roles_.push_back(std::move(role));
    lower_.push_back(lo);
    upper_.push_back(hi);
    weights_.push_back(w);
    return static_cast<EdgeId>(edges_.size()) - 1;
  }

  void add_arc(EdgeId tail, EdgeId head) { arcs_.push_back(Arc{tail, head}); }
  void set_bounds(EdgeId e, int lo, int hi) {
    lower_[idx(e)] = lo;
    upper_[idx(e)] = hi;
  }

  ReductionOutput finish(ReductionKind kind, int source_n) {
    ReductionOutput out{
        build_instance(Graph(n_, edges_), DepDigraph(static_cast<int>(edges_.size()), arcs_),
                       Bounds{lower_, upper_},
                       weighted_ ? std::optional<Weights>(weights_) : std::nullopt),
        kind, {}, source_m_, std::move(roles_), {}, 0};
    for (VertexId v = 0; v < source_n; ++v) out.vertex_map.push_back(v);
    std::vector<EdgeId> forced;
    for (EdgeId e : bridges(out.instance.graph())) {
      if (e >= source_m_) forced.push_back(e);
    }
    out.forced_edges = EdgeSet::from_ids(std::move(forced));
    return out;
  }

 private:
  int n_;
  int source_m_;
  bool weighted_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::string> roles_;
  std::vector<int> lower_;
  std::vector<int> upper_;
  Weights weights_;
};

void expect_sizes(const ReductionOutput& out, long long n, long long m, long long arcs) {
  const Instance& inst = out.instance;
  if (inst.vertex_count() != n || inst.edge_count() != m ||
      inst.deps().arc_count() != arcs) {
    throw std::logic_error(std::string(reduction_kind_token(out.kind)) +
                           " output size differs from its closed form");
  }
}

void check_pairs(const Graph& g, const std::vector<EdgePair>& pairs) {
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= g.edge_count() || b >= g.edge_count()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") with " +
                      std::to_string(g.edge_count()) + " edges");
    }
    if (a == b) {
      throw Error(ErrorCode::kInvalidArgument, "pair joins edge " + std::to_string(a) + " to itself");
    }
  }
}

void check_vertex_vector(const Graph& g, size_t size, const char* what) {
  if (size != idx(g.vertex_count())) {
    throw Error(ErrorCode::kSizeMismatch, std::string(what) + " needs one entry per vertex");
  }
}

void reject_isolated(const Graph& g, const std::vector<int>& deg) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[idx(v)] == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " is isolated");
    }
  }
}

}  // namespace

ReductionOutput lift_bounds(const Instance& instance, int c) {
  if (c < 1) throw Error(ErrorCode::kInvalidArgument, "lift needs c >= 1");
  const int m = instance.edge_count();
  std::optional<int> lo;
  int hi = 0;
  int dep_edges = 0;
  for (EdgeId e = 0; e < m; ++e) {
    if (instance.dep(e).empty()) continue;
    ++dep_edges;
    if (lo && *lo != instance.lower(e)) {
      throw Error(ErrorCode::kNonConstantBounds,
                  "lower bound varies at edge " + std::to_string(e));
    }
    lo = instance.lower(e);
    hi = std::max(hi, instance.upper(e));
  }
  for (EdgeId e = 0; e < m; ++e) {
    const int size = static_cast<int>(instance.dep(e).size());
    if (size > 0 && instance.upper(e) != std::min(hi, size)) {
      throw Error(ErrorCode::kNonConstantBounds,
                  "upper bound varies at edge " + std::to_string(e));
    }
  }
  const int ell = lo.value_or(0);
  const int k = ell + c + 1;

  Builder b(instance.graph(), instance.weights());
  for (EdgeId e = 0; e < m; ++e) {
    if (!instance.dep(e).empty()) b.set_bounds(e, instance.lower(e) + c, instance.upper(e) + c);
  }
  for (const Arc& a : instance.deps().arcs()) b.add_arc(a.tail, a.head);
  std::vector<EdgeId> pendants;
  for (int i = 0; i < k; ++i) {
    const VertexId p = b.add_vertex();
    pendants.push_back(b.add_edge(0, p, "lift:" + std::to_string(i), ell + c, hi + c));
  }
  for (EdgeId x : pendants) {
    for (EdgeId y : pendants) {
      if (x != y) b.add_arc(x, y);
    }
  }
  for (int i = 0; i < c; ++i) {
    for (EdgeId e = 0; e < m; ++e) {
      if (!instance.dep(e).empty()) b.add_arc(pendants[idx(i)], e);
    }
  }
  ReductionOutput out = b.finish(ReductionKind::kLift, instance.vertex_count());
  expect_sizes(out, instance.vertex_count() + k, m + k,
               instance.deps().arc_count() + static_cast<long long>(k) * (k - 1) +
                   static_cast<long long>(c) * dep_edges);
  return out;
}

ReductionOutput from_ccst(const Graph& graph, const std::vector<EdgePair>& conflicts,
                          int c, std::uint64_t seed,
                          const std::optional<Weights>& weights) {
  if (c < 0) throw Error(ErrorCode::kInvalidArgument, "ccst needs c >= 0");
  check_pairs(graph, conflicts);
  const int n = graph.vertex_count();
  const int m = graph.edge_count();

  std::set<EdgePair> unique;
  for (auto [a, b] : conflicts) unique.insert({std::min(a, b), std::max(a, b)});

  Builder b(graph, weights);
  for (EdgeId e = 0; e < m; ++e) b.set_bounds(e, 0, c);
  const VertexId p = b.add_vertex();
  b.add_edge(p, 0, "pq", 0, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (int i = 0; i < c; ++i) {
      const EdgeId pe = b.add_edge(p, b.add_vertex(),
                                   etag("pendant", e) + "." + std::to_string(i), 0, 0);
      b.add_arc(pe, e);
    }
  }
  std::mt19937_64 rng(seed);
  for (const auto& [x, y] : unique) {
    if (rng() & 1U) {
      b.add_arc(y, x);
    } else {
      b.add_arc(x, y);
    }
  }
  ReductionOutput out = b.finish(ReductionKind::kCcst, n);
  out.seed = seed;
  const long long cm = static_cast<long long>(c) * m;
  expect_sizes(out, n + 1 + cm, m + 1 + cm, static_cast<long long>(unique.size()) + cm);
  return out;
}

ReductionOutput from_fcst(const Graph& graph, const std::vector<EdgePair>& forcing,
                          const std::optional<Weights>& weights) {
  check_pairs(graph, forcing);
  Builder b(graph, weights);
  for (const auto& [x, y] : forcing) {
    const EdgeId p = b.add_edge(0, b.add_vertex(),
                                "pair:e" + std::to_string(x) + ".e" + std::to_string(y), 1, 2);
    b.add_arc(x, p);
    b.add_arc(y, p);
  }
  ReductionOutput out = b.finish(ReductionKind::kFcst, graph.vertex_count());
  const long long k = static_cast<long long>(forcing.size());
  expect_sizes(out, graph.vertex_count() + k, graph.edge_count() + k, 2 * k);
  return out;
}

ReductionOutput from_mdst(const Graph& graph, const std::vector<int>& dstar,
                          const std::optional<Weights>& weights) {
  check_vertex_vector(graph, dstar.size(), "degree caps");
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  for (VertexId v = 0; v < n; ++v) {
    if (dstar[idx(v)] < 0 || (n >= 2 && dstar[idx(v)] < 1)) {
      throw Error(ErrorCode::kInfeasibleDegreeCap,
                  "vertex " + std::to_string(v) + " has cap " + std::to_string(dstar[idx(v)]));
    }
  }
  Builder b(graph, weights);
  for (VertexId v = 0; v < n; ++v) {
    b.add_edge(v, b.add_vertex(), vtag("copy", v), 0, dstar[idx(v)]);
  }
  for (EdgeId e = 0; e < m; ++e) {
    b.add_arc(e, m + graph.edge(e).u);
    b.add_arc(e, m + graph.edge(e).v);
  }
  ReductionOutput out = b.finish(ReductionKind::kMdst, n);
  expect_sizes(out, 2LL * n, m + n, 2LL * m);
  return out;
}

ReductionOutput from_min_degree(const Graph& graph, const std::vector<int>& lv,
                                const std::vector<int>& uv,
                                const std::optional<Weights>& weights) {
  check_vertex_vector(graph, lv.size(), "lower degree bounds");
  check_vertex_vector(graph, uv.size(), "upper degree bounds");
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  const std::vector<int> deg = graph.degrees();
  reject_isolated(graph, deg);
  for (VertexId v = 0; v < n; ++v) {
    if (lv[idx(v)] < 0 || uv[idx(v)] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " has a negative degree bound");
    }
  }

  Builder b(graph, weights);
  std::vector<EdgeId> e1(idx(n), -1);
  std::vector<EdgeId> e2(idx(n), -1);
  long long dropped_arcs = 0;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId v1 = b.add_vertex();
    const VertexId v2 = b.add_vertex();
    const VertexId v3 = b.add_vertex();
    if (lv[idx(v)] <= std::min(deg[idx(v)], uv[idx(v)])) {
      e1[idx(v)] = b.add_edge(v, v1, vtag("vv1", v), lv[idx(v)], uv[idx(v)]);
    } else {
      dropped_arcs += deg[idx(v)];
    }
    e2[idx(v)] = b.add_edge(v, v2, vtag("vv2", v), 1, 1);
    const EdgeId a = b.add_edge(v1, v3, vtag("v1v3", v), 1, 1);
    const EdgeId c = b.add_edge(v2, v3, vtag("v2v3", v), 1, 1);
    b.add_arc(a, c);
    b.add_arc(c, a);
  }
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId x : {graph.edge(e).u, graph.edge(e).v}) {
      if (e1[idx(x)] >= 0) b.add_arc(e, e1[idx(x)]);
      b.add_arc(e, e2[idx(x)]);
    }
  }
  ReductionOutput out = b.finish(ReductionKind::kMinDegree, n);
  long long dropped_edges = 0;
  for (VertexId v = 0; v < n; ++v) dropped_edges += e1[idx(v)] < 0 ? 1 : 0;
  expect_sizes(out, 4LL * n, m + 4LL * n - dropped_edges,
               4LL * m - dropped_arcs + 2LL * n);
  return out;
}

ReductionOutput from_fmdst(const Graph& graph, const std::vector<bool>& in_c,
                           const std::vector<int>& lv,
                           const std::optional<Weights>& weights) {
  check_vertex_vector(graph, in_c.size(), "nonleaf set");
  check_vertex_vector(graph, lv.size(), "lower degree bounds");
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  const std::vector<int> deg = graph.degrees();
  reject_isolated(graph, deg);
  for (VertexId v = 0; v < n; ++v) {
    if (in_c[idx(v)] && lv[idx(v)] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " has a negative lower bound");
    }
  }

  Builder b(graph, weights);
  std::vector<EdgeId> kept(idx(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId v1 = b.add_vertex();
    const VertexId v2 = b.add_vertex();
    const VertexId v3 = b.add_vertex();
    // lower > deg_G(v): v1v3 and v2v3 are both bridges, so (0, 0) on v1v3
    // can never hold.
    const bool hopeless = in_c[idx(v)] && lv[idx(v)] > deg[idx(v)];
    kept[idx(v)] = in_c[idx(v)]
                       ? b.add_edge(v, v1, vtag("vv1", v), std::min(lv[idx(v)], deg[idx(v)]),
                                    deg[idx(v)])
                       : b.add_edge(v, v2, vtag("vv2", v), 1, 1);
    const int cap = hopeless ? 0 : 1;
    const EdgeId a = b.add_edge(v1, v3, vtag("v1v3", v), cap, cap);
    const EdgeId c = b.add_edge(v2, v3, vtag("v2v3", v), 1, 1);
    b.add_arc(a, c);
    b.add_arc(c, a);
  }
  for (EdgeId e = 0; e < m; ++e) {
    b.add_arc(e, kept[idx(graph.edge(e).u)]);
    b.add_arc(e, kept[idx(graph.edge(e).v)]);
  }
  ReductionOutput out = b.finish(ReductionKind::kFmdst, n);
  expect_sizes(out, 4LL * n, m + 3LL * n, 2LL * m + 2LL * n);
  return out;
}

ReductionOutput reduce(const SourceProblem& problem, const ReduceOptions& options) {
  check_source_problem(problem);
  switch (problem.kind) {
    case SourceKind::kCcst:
      return from_ccst(problem.graph, problem.pairs, options.c, options.seed, problem.weights);
    case SourceKind::kFcst:
      return from_fcst(problem.graph, problem.pairs, problem.weights);
    case SourceKind::kMdst:
      return from_mdst(problem.graph, problem.upper, problem.weights);
    case SourceKind::kMinDegree:
      return from_min_degree(problem.graph, problem.lower, problem.upper, problem.weights);
    case SourceKind::kFmdst:
      return from_fmdst(problem.graph, problem.in_c, problem.lower, problem.weights);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown source kind");
}

EdgeSet pull_back(const ReductionOutput& output, const EdgeSet& witness) {
  witness.check_range(output.instance.edge_count());
  if (!satisfies(output.instance, witness).pass()) {
    throw Error(ErrorCode::kInvalidWitness,
                "witness does not solve the reduced instance");
  }
  std::vector<EdgeId> ids;
  for (EdgeId e : witness) {
    if (e < output.source_edge_count) ids.push_back(e);
  }
  return EdgeSet::from_ids(std::move(ids));
}

}  // namespace gdcst
