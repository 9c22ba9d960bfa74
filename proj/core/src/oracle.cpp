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

#include "gdcst/oracle.hpp"

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gdcst/error.hpp"
#include "gdcst/union_find.hpp"

namespace gdcst {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

__extension__ typedef __int128 Wide;

// Union-find without path compression so unions can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(idx(n)), size_(idx(n), 1) {
    for (int i = 0; i < n; ++i) parent_[idx(i)] = i;
  }

  int find(int x) const {
    while (parent_[idx(x)] != x) x = parent_[idx(x)];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[idx(a)] < size_[idx(b)]) std::swap(a, b);
    parent_[idx(b)] = a;
    size_[idx(a)] += size_[idx(b)];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[idx(b)];
    size_[idx(a)] -= size_[idx(b)];
    parent_[idx(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

// Running dependency counts; reports when a chosen edge can no longer reach
// its bounds whatever happens to the undecided edges.
class DependencyCounter {
 public:
  explicit DependencyCounter(const Instance& inst)
      : inst_(inst),
        chosen_(idx(inst.edge_count()), 0),
        decided_(idx(inst.edge_count()), 0),
        status_(idx(inst.edge_count()), 0) {}

  // Returns false when the decision breaks some chosen edge. Always pair
  // with retract().
  bool decide(EdgeId e, bool in) {
    status_[idx(e)] = in ? 1 : 2;
    bool ok = !in || viable(e);
    for (EdgeId h : inst_.dependents(e)) {
      ++decided_[idx(h)];
      if (in) ++chosen_[idx(h)];
      if (status_[idx(h)] == 1 && !viable(h)) ok = false;
    }
    return ok;
  }

  void retract(EdgeId e, bool in) {
    status_[idx(e)] = 0;
    for (EdgeId h : inst_.dependents(e)) {
      --decided_[idx(h)];
      if (in) --chosen_[idx(h)];
    }
  }

 private:
  bool viable(EdgeId e) const {
    const int open = static_cast<int>(inst_.dep(e).size()) - decided_[idx(e)];
    return chosen_[idx(e)] <= inst_.upper(e) &&
           chosen_[idx(e)] + open >= inst_.lower(e);
  }

  const Instance& inst_;
  std::vector<int> chosen_;
  std::vector<int> decided_;
  std::vector<std::uint8_t> status_;
};

class TreeWalk {
 public:
  TreeWalk(const Graph& graph, DependencyCounter* counter,
           const std::function<bool(const EdgeSet&)>& visit)
      : graph_(graph), counter_(counter), visit_(visit), uf_(graph.vertex_count()) {}

  void run() { step(0); }

 private:
  // False stops the walk.
  bool step(int i) {
    const int n = graph_.vertex_count();
    if (static_cast<int>(chosen_.size()) == n - 1) {
      return visit_(EdgeSet::from_ids(chosen_));
    }
    if (i == graph_.edge_count()) return true;
    const Edge& e = graph_.edge(i);

    if (uf_.unite(e.u, e.v)) {
      chosen_.push_back(i);
      const bool ok = counter_ == nullptr || counter_->decide(i, true);
      const bool go_on = !ok || step(i + 1);
      if (counter_ != nullptr) counter_->retract(i, true);
      chosen_.pop_back();
      uf_.undo();
      if (!go_on) return false;
    }

    if (connected_without(i)) {
      const bool ok = counter_ == nullptr || counter_->decide(i, false);
      const bool go_on = !ok || step(i + 1);
      if (counter_ != nullptr) counter_->retract(i, false);
      if (!go_on) return false;
    }
    return true;
  }

  // Chosen edges plus edges after i still span G.
  bool connected_without(int i) const {
    UnionFind uf(graph_.vertex_count());
    for (EdgeId c : chosen_) uf.unite(graph_.edge(c).u, graph_.edge(c).v);
    for (EdgeId f = i + 1; f < graph_.edge_count(); ++f) {
      uf.unite(graph_.edge(f).u, graph_.edge(f).v);
    }
    return uf.set_count() == 1;
  }

  const Graph& graph_;
  DependencyCounter* counter_;
  const std::function<bool(const EdgeSet&)>& visit_;
  RollbackUnionFind uf_;
  std::vector<EdgeId> chosen_;
};

void check_cap(int m, int cap) {
  if (m > cap) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(m) + " edges exceeds the oracle cap of " +
                    std::to_string(cap));
  }
}

int degree_in(const Graph& g, const EdgeSet& tree, VertexId v) {
  int d = 0;
  for (EdgeId e : tree) {
    if (g.edge(e).u == v || g.edge(e).v == v) ++d;
  }
  return d;
}

}  // namespace

void for_each_spanning_tree(const Graph& graph,
                            const std::function<bool(const EdgeSet&)>& visit) {
  TreeWalk walk(graph, nullptr, visit);
  walk.run();
}

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& graph) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(graph, [&](const EdgeSet& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::int64_t count_spanning_trees(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n <= 1) return 1;
  const int k = n - 1;
  std::vector<std::vector<Wide>> a(idx(k), std::vector<Wide>(idx(k), 0));
  for (const Edge& e : graph.edges()) {
    // Vertex 0's row and column are dropped.
    const int u = e.u - 1;
    const int v = e.v - 1;
    if (u >= 0) a[idx(u)][idx(u)] += 1;
    if (v >= 0) a[idx(v)][idx(v)] += 1;
    if (u >= 0 && v >= 0) {
      a[idx(u)][idx(v)] -= 1;
      a[idx(v)][idx(u)] -= 1;
    }
  }
  Wide prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (a[idx(p)][idx(p)] == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r) {
        if (a[idx(r)][idx(p)] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[idx(p)], a[idx(swap_row)]);
      sign = -sign;
    }
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) {
        a[idx(r)][idx(c)] =
            (a[idx(r)][idx(c)] * a[idx(p)][idx(p)] - a[idx(r)][idx(p)] * a[idx(p)][idx(c)]) /
            prev;
      }
    }
    prev = a[idx(p)][idx(p)];
  }
  return static_cast<std::int64_t>(sign * a[idx(k - 1)][idx(k - 1)]);
}

std::string_view oracle_mode_name(OracleMode mode) {
  return mode == OracleMode::kTrees ? "trees" : "subsets";
}

SolveReport oracle_solve(const Instance& instance, bool optimize,
                         const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int m = instance.edge_count();
  const int n = instance.vertex_count();
  check_cap(m, options.max_edges);
  const bool weighted = optimize && instance.is_weighted();

  SolveReport report;
  report.path = SolverPath::kOracle;
  std::optional<EdgeSet> best;
  Weight best_weight = 0;

  // Returns false once the search can stop.
  auto consider = [&](const EdgeSet& s) {
    ++report.stats.oracle_calls;
    if (!satisfies(instance, s).pass()) return true;
    if (!weighted) {
      best = s;
      return false;
    }
    const Weight w = total_weight(instance, s);
    if (!best || w < best_weight) {
      best = s;
      best_weight = w;
    }
    return true;
  };

  if (options.mode == OracleMode::kTrees) {
    DependencyCounter counter(instance);
    TreeWalk walk(instance.graph(), &counter, [&](const EdgeSet& t) {
      ++report.stats.nodes;
      return consider(t);
    });
    walk.run();
  } else {
    if (m >= 63) check_cap(m, 62);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      ++report.stats.nodes;
      if (std::popcount(mask) != n - 1) continue;
      std::vector<EdgeId> ids;
      for (int e = 0; e < m; ++e) {
        if ((mask >> e) & 1U) ids.push_back(e);
      }
      const EdgeSet s = EdgeSet::from_ids(std::move(ids));
      if (!is_spanning_tree(instance.graph(), s)) continue;
      if (!consider(s)) break;
    }
  }

  if (best) {
    report.verdict = Verdict::kFeasible;
    if (weighted) report.optimal_weight = best_weight;
    report.witness = std::move(best);
  }
  report.stats.ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return report;
}

bool brute_sat(const Cnf& cnf, int max_vars) {
  check_cnf(cnf);
  if (cnf.variable_count > max_vars) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(cnf.variable_count) + " variables exceeds cap " +
                    std::to_string(max_vars));
  }
  const std::uint64_t total = std::uint64_t{1} << cnf.variable_count;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    bool all = true;
    for (const auto& clause : cnf.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (assignment >> ((lit < 0 ? -lit : lit) - 1)) & 1U;
        if (value == (lit > 0)) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool check_source_solution(const SourceProblem& problem, const EdgeSet& tree) {
  check_source_problem(problem);
  const Graph& g = problem.graph;
  tree.check_range(g.edge_count());
  if (!is_spanning_tree(g, tree)) {
    throw Error(ErrorCode::kNotSpanningTree, "candidate is not a spanning tree");
  }
  switch (problem.kind) {
    case SourceKind::kCcst:
      for (const auto& [a, b] : problem.pairs) {
        if (tree.contains(a) && tree.contains(b)) return false;
      }
      return true;
    case SourceKind::kFcst:
      for (const auto& [a, b] : problem.pairs) {
        if (!tree.contains(a) && !tree.contains(b)) return false;
      }
      return true;
    case SourceKind::kMdst:
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (degree_in(g, tree, v) > problem.upper[idx(v)]) return false;
      }
      return true;
    case SourceKind::kMinDegree:
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int d = degree_in(g, tree, v);
        if (d >= 2 && (d < problem.lower[idx(v)] || d > problem.upper[idx(v)])) {
          return false;
        }
      }
      return true;
    case SourceKind::kFmdst:
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int d = degree_in(g, tree, v);
        if (problem.in_c[idx(v)] ? d < problem.lower[idx(v)] : d != 1) return false;
      }
      return true;
  }
  return false;
}

SourceOptimum source_oracle(const SourceProblem& problem, bool optimize,
                            int max_edges) {
  check_source_problem(problem);
  check_cap(problem.graph.edge_count(), max_edges);
  const bool weighted = optimize && problem.weights.has_value();
  SourceOptimum out;
  for_each_spanning_tree(problem.graph, [&](const EdgeSet& t) {
    if (!check_source_solution(problem, t)) return true;
    if (!weighted) {
      out.feasible = true;
      out.tree = t;
      return false;
    }
    Weight w = 0;
    for (EdgeId e : t) w = checked_add(w, (*problem.weights)[idx(e)]);
    if (!out.feasible || w < *out.weight) {
      out.feasible = true;
      out.tree = t;
      out.weight = w;
    }
    return true;
  });
  return out;
}

}  // namespace gdcst
