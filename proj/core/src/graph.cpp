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

#include "gdcst/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

#include "gdcst/error.hpp"
#include "gdcst/union_find.hpp"
#include "graph_algos.hpp"

namespace gdcst {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfArc: return "SelfArc";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kInfeasibleBounds: return "InfeasibleBounds";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kNonConstantBounds: return "NonConstantBounds";
    case ErrorCode::kInfeasibleDegreeCap: return "InfeasibleDegreeCap";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kNotSpanningTree: return "NotSpanningTree";
    case ErrorCode::kNot322: return "Not322";
    case ErrorCode::kInvalidCnf: return "InvalidCnf";
    case ErrorCode::kUnreachableTarget: return "UnreachableTarget";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kLiteralOutOfRange: return "LiteralOutOfRange";
    case ErrorCode::kUnterminatedClause: return "UnterminatedClause";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

}  // namespace

// --- Graph ------------------------------------------------------------------

Graph::Graph(int vertex_count, std::vector<Edge> edges, bool simple)
    : vertex_count_(vertex_count), simple_(simple) {
  if (vertex_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_edge(const Edge& e) const {
  if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "edge endpoint outside 0.." + std::to_string(vertex_count_ - 1));
  }
  if (e.u == e.v) {
    throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(e.u));
  }
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  Edge e{u, v};
  check_edge(e);
  if (simple_) {
    auto same = [&](const Edge& f) {
      return (f.u == u && f.v == v) || (f.u == v && f.v == u);
    };
    if (std::any_of(edges_.begin(), edges_.end(), same)) {
      throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " +
                                                 std::to_string(u) + "-" +
                                                 std::to_string(v));
    }
  }
  edges_.push_back(e);
  return edge_count() - 1;
}

std::vector<std::vector<EdgeId>> Graph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(idx(vertex_count_));
  for (EdgeId e = 0; e < edge_count(); ++e) {
    inc[idx(edges_[idx(e)].u)].push_back(e);
    inc[idx(edges_[idx(e)].v)].push_back(e);
  }
  return inc;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(idx(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++deg[idx(e.u)];
    ++deg[idx(e.v)];
  }
  return deg;
}

// --- DepDigraph / Bounds / EdgeSet -------------------------------------------

DepDigraph::DepDigraph(int edge_count, std::vector<Arc> arcs)
    : edge_count_(edge_count), arcs_(std::move(arcs)) {
  std::set<Arc> seen;
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.head < 0 || a.tail >= edge_count_ ||
        a.head >= edge_count_) {
      throw Error(ErrorCode::kIndexOutOfRange, "arc endpoint is not an edge id");
    }
    if (a.tail == a.head) {
      throw Error(ErrorCode::kSelfArc,
                  "self-arc on edge " + std::to_string(a.tail));
    }
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::kDuplicateArc,
                  "duplicate arc " + std::to_string(a.tail) + "->" +
                      std::to_string(a.head));
    }
  }
}

Bounds Bounds::zeros(int edge_count) {
  return Bounds{std::vector<int>(idx(edge_count), 0),
                std::vector<int>(idx(edge_count), 0)};
}

EdgeSet::EdgeSet(std::initializer_list<EdgeId> ids)
    : EdgeSet(from_ids(std::vector<EdgeId>(ids))) {}

EdgeSet EdgeSet::from_ids(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate edge id in edge set");
  }
  if (!ids.empty() && ids.front() < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative edge id");
  }
  EdgeSet s;
  s.ids_ = std::move(ids);
  return s;
}

EdgeSet EdgeSet::from_mask(const std::vector<bool>& mask) {
  EdgeSet s;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s.ids_.push_back(static_cast<EdgeId>(i));
  }
  return s;
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

void EdgeSet::check_range(int edge_count) const {
  if (!ids_.empty() && ids_.back() >= edge_count) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "edge id " + std::to_string(ids_.back()) + " >= " +
                    std::to_string(edge_count));
  }
}

std::vector<bool> EdgeSet::to_mask(int edge_count) const {
  check_range(edge_count);
  std::vector<bool> mask(idx(edge_count), false);
  for (EdgeId e : ids_) mask[idx(e)] = true;
  return mask;
}

// --- Instance ---------------------------------------------------------------

Instance build_instance(Graph graph, DepDigraph deps, Bounds bounds,
                        std::optional<Weights> weights, std::string name) {
  const int m = graph.edge_count();
  if (deps.edge_count() != m) {
    throw Error(ErrorCode::kSizeMismatch,
                "dependency digraph is over " +
                    std::to_string(deps.edge_count()) + " edges, graph has " +
                    std::to_string(m));
  }
  if (bounds.lower.size() != idx(m) || bounds.upper.size() != idx(m)) {
    throw Error(ErrorCode::kSizeMismatch, "bounds length differs from edge count");
  }
  if (weights && weights->size() != idx(m)) {
    throw Error(ErrorCode::kSizeMismatch, "weights length differs from edge count");
  }

  std::vector<Arc> arcs(deps.arcs().begin(), deps.arcs().end());
  std::sort(arcs.begin(), arcs.end());

  Instance inst;
  inst.dep_.assign(idx(m), {});
  inst.dependents_.assign(idx(m), {});
  for (const Arc& a : arcs) {
    inst.dep_[idx(a.head)].push_back(a.tail);
    inst.dependents_[idx(a.tail)].push_back(a.head);
  }
  for (auto& list : inst.dep_) std::sort(list.begin(), list.end());

  for (EdgeId e = 0; e < m; ++e) {
    int& lo = bounds.lower[idx(e)];
    int& hi = bounds.upper[idx(e)];
    const int ndep = static_cast<int>(inst.dep_[idx(e)].size());
    if (lo < 0 || hi < 0) {
      throw Error(ErrorCode::kInfeasibleBounds,
                  "negative bound on edge " + std::to_string(e));
    }
    if (lo > hi) {
      throw Error(ErrorCode::kInfeasibleBounds,
                  "lower > upper on edge " + std::to_string(e));
    }
    if (lo > ndep) {
      throw Error(ErrorCode::kInfeasibleBounds,
                  "lower bound " + std::to_string(lo) + " exceeds |dep| = " +
                      std::to_string(ndep) + " on edge " + std::to_string(e));
    }
    hi = std::min(hi, ndep);
  }

  inst.graph_ = std::move(graph);
  inst.deps_ = DepDigraph(m, std::move(arcs));
  inst.bounds_ = std::move(bounds);
  inst.weights_ = std::move(weights);
  inst.name_ = std::move(name);
  return inst;
}

Instance Instance::with_name(std::string name) const {
  Instance copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "weight sum overflows int64");
  }
  return out;
}

Weight total_weight(const Instance& instance, const EdgeSet& s) {
  Weight sum = 0;
  for (EdgeId e : s) sum = checked_add(sum, instance.weight(e));
  return sum;
}

// --- checks -----------------------------------------------------------------

bool is_spanning_tree(const Graph& graph, const EdgeSet& s) {
  s.check_range(graph.edge_count());
  if (s.size() != graph.vertex_count() - 1) return false;
  UnionFind uf(graph.vertex_count());
  for (EdgeId e : s) {
    if (!uf.unite(graph.edge(e).u, graph.edge(e).v)) return false;
  }
  return uf.set_count() == 1;
}

ValidationReport satisfies(const Instance& instance, const EdgeSet& s) {
  s.check_range(instance.edge_count());
  ValidationReport report;
  report.is_spanning_tree = is_spanning_tree(instance.graph(), s);
  report.dependency_counts.reserve(idx(s.size()));
  for (EdgeId e : s) {
    int count = 0;
    for (EdgeId d : instance.dep(e)) count += s.contains(d) ? 1 : 0;
    report.dependency_counts.emplace_back(e, count);
    if (!report.first_violation &&
        (count < instance.lower(e) || count > instance.upper(e))) {
      report.first_violation = e;
    }
  }
  return report;
}

VertexPartition components_excluding(const Graph& graph,
                                     const EdgeSet& excluded) {
  excluded.check_range(graph.edge_count());
  UnionFind uf(graph.vertex_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!excluded.contains(e)) uf.unite(graph.edge(e).u, graph.edge(e).v);
  }
  // Parts come out ordered by smallest vertex because v ascends.
  VertexPartition parts;
  std::vector<int> slot(idx(graph.vertex_count()), -1);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const int root = uf.find(v);
    if (slot[idx(root)] < 0) {
      slot[idx(root)] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[idx(slot[idx(root)])].push_back(v);
  }
  return parts;
}

Contraction contract(const Graph& graph, const VertexPartition& partition,
                     const EdgeSet& crossing_candidates) {
  crossing_candidates.check_range(graph.edge_count());
  Contraction out;
  out.part_of.assign(idx(graph.vertex_count()), -1);
  for (size_t p = 0; p < partition.size(); ++p) {
    for (VertexId v : partition[p]) {
      if (v < 0 || v >= graph.vertex_count() || out.part_of[idx(v)] >= 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "partition is not a partition of the vertex set");
      }
      out.part_of[idx(v)] = static_cast<int>(p);
    }
  }
  if (std::find(out.part_of.begin(), out.part_of.end(), -1) !=
      out.part_of.end()) {
    throw Error(ErrorCode::kInvalidArgument, "partition does not cover every vertex");
  }
  out.graph.vertex_count = static_cast<int>(partition.size());
  for (EdgeId e : crossing_candidates) {
    const int pu = out.part_of[idx(graph.edge(e).u)];
    const int pv = out.part_of[idx(graph.edge(e).v)];
    if (pu == pv) {
      out.dropped_loops.push_back(e);
    } else {
      out.graph.edges.push_back(Edge{pu, pv});
      out.source_edge.push_back(e);
    }
  }
  return out;
}

namespace {

std::vector<std::vector<VertexId>> adjacency(const Graph& graph) {
  std::vector<std::vector<VertexId>> adj(idx(graph.vertex_count()));
  for (const Edge& e : graph.edges()) {
    adj[idx(e.u)].push_back(e.v);
    adj[idx(e.v)].push_back(e.u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

std::optional<int> diameter_of(const std::vector<std::vector<VertexId>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  std::vector<int> dist(idx(n));
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[idx(s)] = 0;
    q.push(s);
    int reached = 1;
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (VertexId y : adj[idx(x)]) {
        if (dist[idx(y)] < 0) {
          dist[idx(y)] = dist[idx(x)] + 1;
          best = std::max(best, dist[idx(y)]);
          ++reached;
          q.push(y);
        }
      }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

// Maximum cardinality search, then verify that the reverse visit order is a
// perfect elimination ordering.
bool chordal(const std::vector<std::vector<VertexId>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> weight(idx(n), 0);
  std::vector<bool> visited(idx(n), false);
  std::vector<VertexId> visit_order;
  visit_order.reserve(idx(n));
  for (int step = 0; step < n; ++step) {
    VertexId pick = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[idx(v)] && (pick < 0 || weight[idx(v)] > weight[idx(pick)])) pick = v;
    }
    visited[idx(pick)] = true;
    visit_order.push_back(pick);
    for (VertexId y : adj[idx(pick)]) {
      if (!visited[idx(y)]) ++weight[idx(y)];
    }
  }
  // position in elimination order = reverse of visit order
  std::vector<int> pos(idx(n));
  for (int i = 0; i < n; ++i) pos[idx(visit_order[idx(n - 1 - i)])] = i;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> later;
    for (VertexId y : adj[idx(v)]) {
      if (pos[idx(y)] > pos[idx(v)]) later.push_back(y);
    }
    if (later.size() < 2) continue;
    const VertexId parent = *std::min_element(
        later.begin(), later.end(),
        [&](VertexId a, VertexId b) { return pos[idx(a)] < pos[idx(b)]; });
    const auto& padj = adj[idx(parent)];
    for (VertexId y : later) {
      if (y != parent && !std::binary_search(padj.begin(), padj.end(), y)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

StructureReport check_structure(const Graph& graph) {
  const auto adj = adjacency(graph);
  StructureReport r;
  r.diameter = diameter_of(adj);
  r.is_chordal = chordal(adj);
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  r.edge_bound_outerplanar = n < 2 ? m <= n - 1 : m <= 2 * n - 3;
  return r;
}

namespace detail {

BridgeScan scan_bridges(const Graph& graph,
                        const std::vector<std::vector<EdgeId>>& incidence,
                        const std::vector<bool>& active) {
  const int n = graph.vertex_count();
  std::vector<int> disc(idx(n), -1);
  std::vector<int> low(idx(n), 0);
  BridgeScan out;
  int timer = 0;
  int roots = 0;
  // Iterative DFS; frames hold (vertex, parent edge, next incidence slot).
  struct Frame {
    VertexId v;
    EdgeId via;
    size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[idx(root)] >= 0) continue;
    ++roots;
    stack.push_back({root, -1, 0});
    disc[idx(root)] = low[idx(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = incidence[idx(f.v)];
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via || !active[idx(e)]) continue;
        const VertexId w = graph.edge(e).other(f.v);
        if (disc[idx(w)] < 0) {
          disc[idx(w)] = low[idx(w)] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[idx(f.v)] = std::min(low[idx(f.v)], disc[idx(w)]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[idx(parent.v)] = std::min(low[idx(parent.v)], low[idx(done.v)]);
          if (low[idx(done.v)] > disc[idx(parent.v)]) {
            out.bridges.push_back(done.via);
          }
        }
      }
    }
  }
  out.connected = roots == 1;
  return out;
}

}  // namespace detail

EdgeSet bridges(const Graph& graph) {
  auto scan = detail::scan_bridges(
      graph, graph.incidence(),
      std::vector<bool>(idx(graph.edge_count()), true));
  return EdgeSet::from_ids(std::move(scan.bridges));
}

int component_count(const Graph& graph) {
  UnionFind uf(graph.vertex_count());
  for (const Edge& e : graph.edges()) uf.unite(e.u, e.v);
  return uf.set_count();
}

}  // namespace gdcst
