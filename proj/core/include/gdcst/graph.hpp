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

// Data model: graphs, dependency digraphs over edge ids, per-edge bounds,
// weights and the immutable Instance tying them together.

#ifndef GDCST_GRAPH_HPP_
#define GDCST_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gdcst {

using VertexId = int;
using EdgeId = int;
using Weight = std::int64_t;
using Weights = std::vector<Weight>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An undirected graph on vertices 0..n-1 whose edge ids are positions in the
// edge list. Loops are never allowed; parallel edges only when the graph is
// not flagged simple.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<Edge> edges = {},
                 bool simple = true);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool is_simple() const { return simple_; }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }

  EdgeId add_edge(VertexId u, VertexId v);

  // incident edge ids per vertex, ascending.
  std::vector<std::vector<EdgeId>> incidence() const;
  std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_edge(const Edge& e) const;

  int vertex_count_ = 1;
  std::vector<Edge> edges_;
  bool simple_ = true;
};

// Contracted graphs and matroid inputs: parallels and loops both allowed.
struct Multigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

struct Arc {
  EdgeId tail = 0;
  EdgeId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Dependency digraph D whose vertices are the edge ids of a companion graph.
// (tail, head) means `tail` is a dependency of `head`.
class DepDigraph {
 public:
  DepDigraph() = default;
  DepDigraph(int edge_count, std::vector<Arc> arcs);

  int edge_count() const { return edge_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }

  friend bool operator==(const DepDigraph&, const DepDigraph&) = default;

 private:
  int edge_count_ = 0;
  std::vector<Arc> arcs_;
};

struct Bounds {
  std::vector<int> lower;
  std::vector<int> upper;

  static Bounds zeros(int edge_count);
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Sorted, duplicate-free set of edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids);
  // Sorts; throws on duplicates or negative ids.
  static EdgeSet from_ids(std::vector<EdgeId> ids);
  static EdgeSet from_mask(const std::vector<bool>& mask);

  bool contains(EdgeId e) const;
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  std::span<const EdgeId> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  // Throws kIndexOutOfRange if any id is >= edge_count.
  void check_range(int edge_count) const;
  std::vector<bool> to_mask(int edge_count) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

// Immutable, normalized problem instance. Construct through build_instance.
class Instance {
 public:
  const Graph& graph() const { return graph_; }
  const DepDigraph& deps() const { return deps_; }
  const Bounds& bounds() const { return bounds_; }
  const std::optional<Weights>& weights() const { return weights_; }
  const std::string& name() const { return name_; }

  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  bool is_weighted() const { return weights_.has_value(); }

  int lower(EdgeId e) const { return bounds_.lower[static_cast<size_t>(e)]; }
  int upper(EdgeId e) const { return bounds_.upper[static_cast<size_t>(e)]; }
  Weight weight(EdgeId e) const {
    return weights_ ? (*weights_)[static_cast<size_t>(e)] : 0;
  }

  // dep(e): in-neighbours of e in D, ascending.
  std::span<const EdgeId> dep(EdgeId e) const {
    return dep_[static_cast<size_t>(e)];
  }
  // Edges having e as a dependency, ascending.
  std::span<const EdgeId> dependents(EdgeId e) const {
    return dependents_[static_cast<size_t>(e)];
  }

  Instance with_name(std::string name) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph_ == b.graph_ && a.deps_ == b.deps_ &&
           a.bounds_ == b.bounds_ && a.weights_ == b.weights_ &&
           a.name_ == b.name_;
  }

 private:
  friend Instance build_instance(Graph, DepDigraph, Bounds,
                                 std::optional<Weights>, std::string);
  Instance() = default;

  Graph graph_;
  DepDigraph deps_;
  Bounds bounds_;
  std::optional<Weights> weights_;
  std::string name_;
  std::vector<std::vector<EdgeId>> dep_;
  std::vector<std::vector<EdgeId>> dependents_;
};

// Validates cross-references, sorts arcs by (tail, head) and clamps
// u(e) to |dep(e)|. Throws kInfeasibleBounds when l(e) > |dep(e)| or l > u.
Instance build_instance(Graph graph, DepDigraph deps, Bounds bounds,
                        std::optional<Weights> weights = std::nullopt,
                        std::string name = {});

// Sum of weights over `s` with overflow detection.
Weight total_weight(const Instance& instance, const EdgeSet& s);
Weight checked_add(Weight a, Weight b);

bool is_spanning_tree(const Graph& graph, const EdgeSet& s);

struct ValidationReport {
  bool is_spanning_tree = false;
  // (edge id, |dep(e) ∩ s|) for every chosen edge, ascending by id.
  std::vector<std::pair<EdgeId, int>> dependency_counts;
  std::optional<EdgeId> first_violation;

  bool bounds_ok() const { return !first_violation.has_value(); }
  bool pass() const { return is_spanning_tree && bounds_ok(); }
};

// Checks l(e) <= |dep(e) ∩ s| <= u(e) for every e in s; also reports whether
// s is a spanning tree, but the bounds verdict does not depend on that.
ValidationReport satisfies(const Instance& instance, const EdgeSet& s);

using VertexPartition = std::vector<std::vector<VertexId>>;

// Connected components of (V, E \ excluded), each sorted, ordered by their
// smallest vertex.
VertexPartition components_excluding(const Graph& graph,
                                     const EdgeSet& excluded);

struct Contraction {
  Multigraph graph;                  // one vertex per part
  std::vector<EdgeId> source_edge;   // H edge -> original edge id
  std::vector<EdgeId> dropped_loops; // candidates with both ends in one part
  std::vector<int> part_of;          // original vertex -> part index
};

Contraction contract(const Graph& graph, const VertexPartition& partition,
                     const EdgeSet& crossing_candidates);

struct StructureReport {
  std::optional<int> diameter;  // nullopt when disconnected
  bool is_chordal = false;
  // Only the necessary condition m <= 2n - 3 (m <= n - 1 for n < 2).
  bool edge_bound_outerplanar = false;
};

StructureReport check_structure(const Graph& graph);

// Edge ids whose removal disconnects their component.
EdgeSet bridges(const Graph& graph);

// Number of weak components of the graph (isolated vertices count).
int component_count(const Graph& graph);

}  // namespace gdcst

#endif  // GDCST_GRAPH_HPP_
