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

#include "gdcst/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdcst/error.hpp"
#include "gdcst/matroid.hpp"
#include "gdcst/union_find.hpp"
#include "graph_algos.hpp"

namespace gdcst {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SolveReport infeasible(SolverPath path) {
  SolveReport r;
  r.verdict = Verdict::kInfeasible;
  r.path = path;
  return r;
}

SolveReport feasible(const Instance& inst, EdgeSet witness, bool optimize,
                     SolverPath path) {
  SolveReport r;
  r.verdict = Verdict::kFeasible;
  if (optimize && inst.is_weighted()) {
    r.optimal_weight = total_weight(inst, witness);
  }
  r.witness = std::move(witness);
  r.path = path;
  return r;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  return v == Verdict::kFeasible ? "Feasible" : "Infeasible";
}

std::string_view solver_path_name(SolverPath p) {
  switch (p) {
    case SolverPath::kMatchingCase: return "MatchingCase";
    case SolverPath::kPartitionCase: return "PartitionCase";
    case SolverPath::kGeneric: return "Generic";
    case SolverPath::kOracle: return "Oracle";
  }
  return "Unknown";
}

void assert_report_consistent(const Instance& instance,
                              const SolveReport& report) {
  if (!report.feasible()) {
    if (report.witness) throw std::logic_error("infeasible report carries a witness");
    return;
  }
  if (!report.witness) throw std::logic_error("feasible report without witness");
  const ValidationReport check = satisfies(instance, *report.witness);
  if (!check.pass()) {
    throw std::logic_error(std::string(solver_path_name(report.path)) +
                           " produced an invalid witness");
  }
  if (report.optimal_weight &&
      *report.optimal_weight != total_weight(instance, *report.witness)) {
    throw std::logic_error("reported weight differs from witness weight");
  }
}

// --- matching case ----------------------------------------------------------

bool detect_matching_case(const Instance& instance) {
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    const int in = static_cast<int>(instance.dep(e).size());
    const int out = static_cast<int>(instance.dependents(e).size());
    if (in + out > 1) return false;
    if (instance.lower(e) != in || instance.upper(e) != in) return false;
  }
  return true;
}

SolveReport solve_matching_case(const Instance& instance) {
  if (!detect_matching_case(instance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "instance is not an oriented matching with l = u = |dep|");
  }
  const auto start = Clock::now();
  const Graph& g = instance.graph();

  std::vector<EdgeId> heads;  // S: edges with a dependency
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (!instance.dep(e).empty()) heads.push_back(e);
  }
  const EdgeSet s = EdgeSet::from_ids(heads);
  const VertexPartition parts = components_excluding(g, s);
  const int k = static_cast<int>(parts.size());
  const Contraction h = contract(g, parts, s);

  // Ground element i is heads[i]. M1 looks at the dependency edges in G,
  // M2 at the head edges in the contracted graph (loops stay dependent).
  Multigraph dep_graph{g.vertex_count(), {}};
  Multigraph contracted{k, {}};
  for (EdgeId e : heads) {
    dep_graph.edges.push_back(g.edge(instance.dep(e).front()));
    contracted.edges.push_back(Edge{h.part_of[idx(g.edge(e).u)],
                                    h.part_of[idx(g.edge(e).v)]});
  }
  const GraphicMatroid m1(std::move(dep_graph));
  const GraphicMatroid m2(std::move(contracted));

  IntersectionStats istats;
  const std::vector<Element> common = max_common_independent(m1, m2, &istats);

  SolveReport report;
  if (static_cast<int>(common.size()) < k - 1) {
    report = infeasible(SolverPath::kMatchingCase);
  } else {
    std::vector<EdgeId> chosen_heads;
    for (int i = 0; i < k - 1; ++i) chosen_heads.push_back(heads[idx(common[idx(i)])]);

    // Spanning forest of G - S seeded with the chosen heads' dependencies.
    UnionFind uf(g.vertex_count());
    std::vector<EdgeId> tree;
    for (EdgeId e : chosen_heads) {
      const EdgeId d = instance.dep(e).front();
      uf.unite(g.edge(d).u, g.edge(d).v);
      tree.push_back(d);
    }
    std::vector<bool> in_tree(idx(instance.edge_count()), false);
    for (EdgeId d : tree) in_tree[idx(d)] = true;
    for (EdgeId e = 0; e < instance.edge_count(); ++e) {
      if (s.contains(e) || in_tree[idx(e)]) continue;
      if (uf.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
    }
    for (EdgeId e : chosen_heads) tree.push_back(e);
    report = feasible(instance, EdgeSet::from_ids(std::move(tree)), false,
                      SolverPath::kMatchingCase);
  }
  report.stats.oracle_calls = istats.oracle_calls;
  report.stats.nodes = istats.augmentations;
  report.stats.ms = elapsed_ms(start);
  assert_report_consistent(instance, report);
  return report;
}

// --- partition case ---------------------------------------------------------

namespace {

// Weak components of D restricted to edges that touch at least one arc.
std::vector<std::vector<EdgeId>> dependency_components(const Instance& inst) {
  const int m = inst.edge_count();
  UnionFind uf(m);
  for (const Arc& a : inst.deps().arcs()) uf.unite(a.tail, a.head);
  std::vector<std::vector<EdgeId>> comps;
  std::vector<int> slot(idx(m), -1);
  for (EdgeId e = 0; e < m; ++e) {
    if (inst.dep(e).empty() && inst.dependents(e).empty()) continue;
    const int root = uf.find(e);
    if (slot[idx(root)] < 0) {
      slot[idx(root)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[idx(slot[idx(root)])].push_back(e);
  }
  return comps;
}

}  // namespace

bool detect_partition_case(const Instance& instance) {
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (instance.lower(e) != 0) return false;
  }
  for (const auto& comp : dependency_components(instance)) {
    const size_t k = comp.size();
    const int u = instance.upper(comp.front());
    for (EdgeId e : comp) {
      // Symmetric complete: every other member is both a dependency and a
      // dependent of e.
      if (instance.dep(e).size() != k - 1 ||
          instance.dependents(e).size() != k - 1) {
        return false;
      }
      if (instance.upper(e) != u) return false;
    }
  }
  return true;
}

SolveReport solve_partition_case(const Instance& instance, bool optimize) {
  if (!detect_partition_case(instance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "instance is not a union of symmetric cliques with uniform u");
  }
  const auto start = Clock::now();
  const Graph& g = instance.graph();
  const int m = instance.edge_count();

  std::vector<std::vector<Element>> blocks = dependency_components(instance);
  std::vector<int> capacities;
  for (const auto& b : blocks) capacities.push_back(instance.upper(b.front()) + 1);

  const GraphicMatroid graphic(Multigraph{
      g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end())});
  const PartitionMatroid partition(m, std::move(blocks), std::move(capacities));
  const int target = g.vertex_count() - 1;

  IntersectionStats istats;
  std::optional<std::vector<Element>> found;
  if (optimize && instance.is_weighted()) {
    found = min_weight_common_independent_of_size(
        graphic, partition, *instance.weights(), target, &istats);
  } else {
    std::vector<Element> common = max_common_independent(graphic, partition, &istats);
    if (static_cast<int>(common.size()) == target) found = std::move(common);
  }

  SolveReport report = found ? feasible(instance, EdgeSet::from_ids(*found),
                                        optimize, SolverPath::kPartitionCase)
                             : infeasible(SolverPath::kPartitionCase);
  report.stats.oracle_calls = istats.oracle_calls;
  report.stats.nodes = istats.augmentations;
  report.stats.ms = elapsed_ms(start);
  assert_report_consistent(instance, report);
  return report;
}

// --- generic branch and bound -----------------------------------------------

namespace {

enum Status : std::uint8_t { kUndecided = 0, kIn = 1, kOut = 2 };
using State = std::vector<std::uint8_t>;

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, bool optimize)
      : inst_(inst),
        graph_(inst.graph()),
        weighted_(optimize && inst.is_weighted()),
        incidence_(graph_.incidence()) {
    const int m = inst_.edge_count();
    order_.resize(idx(m));
    std::iota(order_.begin(), order_.end(), 0);
    auto d_degree = [&](EdgeId e) {
      return inst_.dep(e).size() + inst_.dependents(e).size();
    };
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      return d_degree(a) > d_degree(b);
    });
    by_weight_ = std::vector<EdgeId>(idx(m));
    std::iota(by_weight_.begin(), by_weight_.end(), 0);
    std::stable_sort(by_weight_.begin(), by_weight_.end(), [&](EdgeId a, EdgeId b) {
      return inst_.weight(a) < inst_.weight(b);
    });
  }

  void run() { explore(State(idx(inst_.edge_count()), kUndecided)); }

  const std::optional<EdgeSet>& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }
  std::int64_t checks() const { return checks_; }

 private:
  void explore(State state) {
    if (!propagate(state)) {
      ++nodes_;
      return;
    }
    if (weighted_ && best_ && lower_bound(state) >= best_weight_) {
      ++nodes_;
      return;
    }
    EdgeId pick = -1;
    for (EdgeId e : order_) {
      if (state[idx(e)] == kUndecided) {
        pick = e;
        break;
      }
    }
    if (pick < 0) {
      ++nodes_;
      evaluate(state);
      return;
    }
    State with = state;
    with[idx(pick)] = kIn;
    explore(std::move(with));
    if (done_) return;
    state[idx(pick)] = kOut;
    explore(std::move(state));
  }

  void evaluate(const State& state) {
    std::vector<bool> mask(state.size());
    for (size_t i = 0; i < state.size(); ++i) mask[i] = state[i] == kIn;
    EdgeSet candidate = EdgeSet::from_mask(mask);
    ++checks_;
    if (!satisfies(inst_, candidate).pass()) return;
    if (!weighted_) {
      best_ = std::move(candidate);
      done_ = true;
      return;
    }
    const Weight w = total_weight(inst_, candidate);
    if (!best_ || w < best_weight_) {
      best_ = std::move(candidate);
      best_weight_ = w;
    }
  }

  // Fixpoint of the forcing rules; false when the node cannot lead to a
  // solution.
  bool propagate(State& state) {
    const int n = graph_.vertex_count();
    const int m = inst_.edge_count();
    bool changed = true;
    while (changed) {
      changed = false;

      UnionFind uf(n);
      int chosen = 0;
      for (EdgeId e = 0; e < m; ++e) {
        if (state[idx(e)] != kIn) continue;
        ++chosen;
        if (!uf.unite(graph_.edge(e).u, graph_.edge(e).v)) return false;
      }
      if (chosen > n - 1) return false;
      for (EdgeId e = 0; e < m; ++e) {
        if (state[idx(e)] == kUndecided &&
            uf.same(graph_.edge(e).u, graph_.edge(e).v)) {
          state[idx(e)] = kOut;
          changed = true;
        }
      }

      std::vector<bool> active(idx(m));
      for (EdgeId e = 0; e < m; ++e) active[idx(e)] = state[idx(e)] != kOut;
      const detail::BridgeScan scan = detail::scan_bridges(graph_, incidence_, active);
      if (!scan.connected) return false;
      for (EdgeId e : scan.bridges) {
        if (state[idx(e)] == kUndecided) {
          state[idx(e)] = kIn;
          changed = true;
        }
      }

      for (EdgeId e = 0; e < m; ++e) {
        if (state[idx(e)] == kOut) continue;
        int in = 0;
        int open = 0;
        for (EdgeId d : inst_.dep(e)) {
          in += state[idx(d)] == kIn ? 1 : 0;
          open += state[idx(d)] == kUndecided ? 1 : 0;
        }
        const bool broken = in > inst_.upper(e) || in + open < inst_.lower(e);
        if (state[idx(e)] == kUndecided) {
          if (broken) {
            state[idx(e)] = kOut;
            changed = true;
          }
          continue;
        }
        if (broken) return false;
        if (open == 0) continue;
        std::uint8_t force = kUndecided;
        if (in == inst_.upper(e)) force = kOut;
        else if (in + open == inst_.lower(e)) force = kIn;
        if (force == kUndecided) continue;
        for (EdgeId d : inst_.dep(e)) {
          if (state[idx(d)] == kUndecided) state[idx(d)] = force;
        }
        changed = true;
      }
    }
    return true;
  }

  // Weight of the cheapest spanning tree that keeps every chosen edge and
  // ignores dependency bounds.
  Weight lower_bound(const State& state) const {
    UnionFind uf(graph_.vertex_count());
    Weight total = 0;
    for (EdgeId e = 0; e < inst_.edge_count(); ++e) {
      if (state[idx(e)] == kIn) {
        uf.unite(graph_.edge(e).u, graph_.edge(e).v);
        total = checked_add(total, inst_.weight(e));
      }
    }
    for (EdgeId e : by_weight_) {
      if (state[idx(e)] == kUndecided && uf.unite(graph_.edge(e).u, graph_.edge(e).v)) {
        total = checked_add(total, inst_.weight(e));
      }
    }
    return total;
  }

  const Instance& inst_;
  const Graph& graph_;
  const bool weighted_;
  const std::vector<std::vector<EdgeId>> incidence_;
  std::vector<EdgeId> order_;
  std::vector<EdgeId> by_weight_;

  std::optional<EdgeSet> best_;
  Weight best_weight_ = 0;
  bool done_ = false;
  std::int64_t nodes_ = 0;
  std::int64_t checks_ = 0;
};

}  // namespace

SolveReport solve_generic(const Instance& instance, bool optimize) {
  const auto start = Clock::now();
  BranchAndBound search(instance, optimize);
  search.run();
  SolveReport report = search.best()
                           ? feasible(instance, *search.best(), optimize,
                                      SolverPath::kGeneric)
                           : infeasible(SolverPath::kGeneric);
  report.stats.nodes = search.nodes();
  report.stats.oracle_calls = search.checks();
  report.stats.ms = elapsed_ms(start);
  assert_report_consistent(instance, report);
  return report;
}

SolveReport solve(const Instance& instance, bool optimize) {
  if (!optimize && detect_matching_case(instance)) {
    return solve_matching_case(instance);
  }
  if (detect_partition_case(instance)) {
    return solve_partition_case(instance, optimize);
  }
  return solve_generic(instance, optimize);
}

}  // namespace gdcst
