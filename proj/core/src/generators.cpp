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

#include "gdcst/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "gdcst/error.hpp"
#include "gdcst/union_find.hpp"

namespace gdcst {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

constexpr int kUnbounded = std::numeric_limits<int>::max();

// Graph, arcs and role tags; bounds are ℓ = u = |dep| throughout.
class SatBuilder {
 public:
  explicit SatBuilder(int vertex_count) : n_(vertex_count) {}

  EdgeId edge(VertexId u, VertexId v, std::string role) {
    edges_.push_back(Edge{u, v});
    roles_.push_back(std::move(role));
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  void arc(EdgeId tail, EdgeId head) { arcs_.push_back(Arc{tail, head}); }

  GeneratedInstance finish(std::string name, std::vector<std::string> notes) {
    const int m = static_cast<int>(edges_.size());
    Bounds b{std::vector<int>(idx(m), 0), std::vector<int>(idx(m), kUnbounded)};
    for (const Arc& a : arcs_) ++b.lower[idx(a.head)];
    return GeneratedInstance{
        build_instance(Graph(n_, edges_), DepDigraph(m, arcs_), std::move(b),
                       std::nullopt, std::move(name)),
        std::move(roles_), std::move(notes)};
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::string> roles_;
};

void require_322(const Cnf& cnf) {
  check_cnf(cnf);
  if (!validate_322(cnf)) {
    throw Error(ErrorCode::kNot322, "formula is not (3,2,2): clause widths must be 2..3 and "
                                    "each literal may occur at most twice");
  }
}

std::string occ_name(size_t clause, size_t pos) {
  return "c" + std::to_string(clause + 1) + "." + std::to_string(pos + 1);
}

struct Occurrence {
  size_t clause;
  size_t pos;
  int lit;
};

// Occurrences per literal (index 2(x-1) for x, 2(x-1)+1 for ~x), in clause
// order.
std::vector<std::vector<Occurrence>> occurrences(const Cnf& cnf) {
  std::vector<std::vector<Occurrence>> out(idx(2 * cnf.variable_count));
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    for (size_t i = 0; i < cnf.clauses[c].size(); ++i) {
      const int lit = cnf.clauses[c][i];
      const int slot = 2 * ((lit < 0 ? -lit : lit) - 1) + (lit < 0 ? 1 : 0);
      out[idx(slot)].push_back(Occurrence{c, i, lit});
    }
  }
  return out;
}

size_t literal_total(const Cnf& cnf) {
  size_t total = 0;
  for (const auto& c : cnf.clauses) total += c.size();
  return total;
}

GeneratedInstance star_encoding(const Cnf& cnf, bool as_paths) {
  require_322(cnf);
  const int nv = cnf.variable_count;
  const int n = 1 + 3 * nv + static_cast<int>(literal_total(cnf));
  SatBuilder b(n);
  std::vector<EdgeId> vv(idx(2 * nv));  // v v_x, v v_x̄
  for (int x = 0; x < nv; ++x) {
    const VertexId vx = 1 + 3 * x;
    const std::string name = std::to_string(x + 1);
    vv[idx(2 * x)] = b.edge(0, vx, "vv:x" + name);
    vv[idx(2 * x + 1)] = b.edge(0, vx + 1, "vv:~x" + name);
    const EdgeId bar = b.edge(vx, vx + 1, "vxvnx:x" + name);
    const EdgeId w = b.edge(0, vx + 2, "vw:x" + name);
    b.arc(bar, w);
  }
  std::vector<std::vector<EdgeId>> clause_edge(cnf.clauses.size());
  VertexId next = 1 + 3 * nv;
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    const VertexId first = next;
    for (size_t i = 0; i < cnf.clauses[c].size(); ++i) {
      clause_edge[c].push_back(b.edge(0, next++, "vvc:" + occ_name(c, i)));
    }
    for (VertexId u = first; u + 1 < next; ++u) {
      b.edge(u, u + 1, "path:" + occ_name(c, idx(u - first)));
    }
  }
  const auto occ = occurrences(cnf);
  for (size_t slot = 0; slot < occ.size(); ++slot) {
    const auto& list = occ[slot];
    for (size_t k = 0; k < list.size(); ++k) {
      const EdgeId head = clause_edge[list[k].clause][list[k].pos];
      // Occurrences are in clause order, so list[0] is the lower clause.
      const EdgeId tail = as_paths && k == 1 ? clause_edge[list[0].clause][list[0].pos]
                                             : vv[slot];
      b.arc(tail, head);
    }
  }
  std::vector<std::string> notes;
  if (as_paths) notes.push_back("two-leaf out-stars rewired; middle vertex = lower clause index");
  return b.finish(as_paths ? "sat-paths" : "sat-outstars", std::move(notes));
}

}  // namespace

GeneratedInstance sat_to_gdcst_outstars(const Cnf& cnf) { return star_encoding(cnf, false); }

GeneratedInstance sat_to_gdcst_paths(const Cnf& cnf) { return star_encoding(cnf, true); }

GeneratedInstance sat_to_gdcst_instars(const Cnf& cnf) {
  require_322(cnf);
  const int nv = cnf.variable_count;
  const int n = 1 + 3 * nv + 4 * static_cast<int>(literal_total(cnf));
  SatBuilder b(n);

  // Literal-vertex blocks {v_c, a, b, w} in clause order.
  std::vector<std::vector<VertexId>> block(cnf.clauses.size());
  VertexId next = 1 + 3 * nv;
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    for (size_t i = 0; i < cnf.clauses[c].size(); ++i) {
      block[c].push_back(next);
      next += 4;
    }
  }

  const auto occ = occurrences(cnf);
  std::vector<std::vector<EdgeId>> va(cnf.clauses.size());
  for (auto& row : va) row.resize(3, -1);
  for (int x = 0; x < nv; ++x) {
    std::vector<std::pair<EdgeId, int>> vb;  // (v b edge, literal)
    for (int sign = 0; sign < 2; ++sign) {
      for (const Occurrence& o : occ[idx(2 * x + sign)]) {
        const VertexId base = block[o.clause][o.pos];
        const std::string tag = occ_name(o.clause, o.pos);
        const EdgeId ab = b.edge(base + 1, base + 2, "ab:" + tag);
        const EdgeId w = b.edge(0, base + 3, "vwc:" + tag);
        b.arc(ab, w);
        va[o.clause][o.pos] = b.edge(0, base + 1, "va:" + tag);
        vb.emplace_back(b.edge(0, base + 2, "vb:" + tag), o.lit);
      }
    }
    const VertexId vx = 1 + 3 * x;
    const std::string name = std::to_string(x + 1);
    const EdgeId bar = b.edge(vx, vx + 1, "vxvnx:x" + name);
    const EdgeId w = b.edge(0, vx + 2, "vw:x" + name);
    b.arc(bar, w);
    const EdgeId pos = b.edge(0, vx, "vv:x" + name);
    const EdgeId neg = b.edge(0, vx + 1, "vv:~x" + name);
    for (const auto& [e, lit] : vb) b.arc(e, lit > 0 ? neg : pos);
  }
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    for (size_t i = 0; i < cnf.clauses[c].size(); ++i) {
      const EdgeId e = b.edge(0, block[c][i], "vvc:" + occ_name(c, i));
      b.arc(va[c][i], e);
    }
    for (size_t i = 0; i + 1 < cnf.clauses[c].size(); ++i) {
      b.edge(block[c][i], block[c][i + 1], "path:" + occ_name(c, i));
    }
  }
  return b.finish("sat-instars", {});
}

std::string_view sat_variant_token(SatVariant v) {
  switch (v) {
    case SatVariant::kOutstars: return "outstars";
    case SatVariant::kPaths: return "paths";
    case SatVariant::kInstars: return "instars";
  }
  return "unknown";
}

GeneratedInstance sat_to_gdcst(const Cnf& cnf, SatVariant variant) {
  switch (variant) {
    case SatVariant::kOutstars: return sat_to_gdcst_outstars(cnf);
    case SatVariant::kPaths: return sat_to_gdcst_paths(cnf);
    case SatVariant::kInstars: return sat_to_gdcst_instars(cnf);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown SAT variant");
}

// --- random draws ------------------------------------------------------------

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty range");
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

Weights random_weights(int m, Weight max_weight, Rng& rng) {
  Weights w(idx(m));
  for (auto& x : w) x = 1 + static_cast<Weight>(uniform_below(rng, static_cast<std::uint64_t>(max_weight)));
  return w;
}

Bounds dep_bounds(int m, const std::vector<Arc>& arcs) {
  Bounds b = Bounds::zeros(m);
  for (const Arc& a : arcs) ++b.lower[idx(a.head)];
  b.upper = b.lower;
  return b;
}

}  // namespace

std::string_view bound_mode_token(BoundMode mode) {
  switch (mode) {
    case BoundMode::kZero: return "zero";
    case BoundMode::kDep: return "dep";
    case BoundMode::kRandom: return "random";
  }
  return "unknown";
}

Graph random_connected_graph(int n, int m, Rng& rng) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_m) {
    throw Error(ErrorCode::kUnreachableTarget,
                "no connected simple graph with n=" + std::to_string(n) +
                    " and m=" + std::to_string(m));
  }
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back(Edge{u, v});
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    shuffle(pairs, rng);
    std::vector<Edge> chosen(pairs.begin(), pairs.begin() + m);
    std::sort(chosen.begin(), chosen.end());
    UnionFind uf(n);
    for (const Edge& e : chosen) uf.unite(e.u, e.v);
    if (uf.set_count() == 1) return Graph(n, std::move(chosen));
  }
  throw Error(ErrorCode::kUnreachableTarget, "no connected sample within the retry budget");
}

Instance random_instance(const GenParams& p) {
  if (p.arc_density < 0.0 || p.arc_density > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "arc density outside [0, 1]");
  }
  if (p.weighted && p.max_weight < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max weight must be positive");
  }
  Rng rng(p.seed);
  Graph g = random_connected_graph(p.n, p.m, rng);
  const int m = g.edge_count();
  std::vector<Arc> arcs;
  for (EdgeId t = 0; t < m; ++t) {
    for (EdgeId h = 0; h < m; ++h) {
      if (t != h && uniform_unit(rng) < p.arc_density) arcs.push_back(Arc{t, h});
    }
  }
  Bounds b = Bounds::zeros(m);
  if (p.mode != BoundMode::kZero) {
    std::vector<int> size(idx(m), 0);
    for (const Arc& a : arcs) ++size[idx(a.head)];
    for (EdgeId e = 0; e < m; ++e) {
      if (p.mode == BoundMode::kDep) {
        b.lower[idx(e)] = b.upper[idx(e)] = size[idx(e)];
      } else {
        b.lower[idx(e)] = uniform_int(rng, 0, size[idx(e)]);
        b.upper[idx(e)] = uniform_int(rng, b.lower[idx(e)], size[idx(e)]);
      }
    }
  }
  std::optional<Weights> w;
  if (p.weighted) w = random_weights(m, p.max_weight, rng);
  return build_instance(std::move(g), DepDigraph(m, std::move(arcs)), std::move(b),
                        std::move(w), "random-" + std::to_string(p.seed));
}

Instance random_matching_instance(int n, int m, int arcs, std::uint64_t seed,
                                  bool weighted) {
  Rng rng(seed);
  Graph g = random_connected_graph(n, m, rng);
  std::vector<EdgeId> order(idx(m));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<Arc> a;
  for (int i = 0; i < arcs && 2 * i + 1 < m; ++i) {
    a.push_back(Arc{order[idx(2 * i)], order[idx(2 * i + 1)]});
  }
  Bounds b = dep_bounds(m, a);
  std::optional<Weights> w;
  if (weighted) w = random_weights(m, 20, rng);
  return build_instance(std::move(g), DepDigraph(m, std::move(a)), std::move(b),
                        std::move(w), "matching-" + std::to_string(seed));
}

Instance random_partition_instance(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  Graph g = random_connected_graph(n, m, rng);
  std::vector<EdgeId> order(idx(m));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<Arc> a;
  Bounds b = Bounds::zeros(m);
  size_t at = 0;
  while (at < order.size()) {
    if (uniform_below(rng, 4) == 0) {
      ++at;  // left outside every clique
      continue;
    }
    const size_t size = std::min<size_t>(order.size() - at, idx(uniform_int(rng, 2, 4)));
    if (size < 2) break;
    const int u = uniform_int(rng, 0, static_cast<int>(size) - 1);
    for (size_t i = at; i < at + size; ++i) {
      b.upper[idx(order[i])] = u;
      for (size_t j = at; j < at + size; ++j) {
        if (i != j) a.push_back(Arc{order[i], order[j]});
      }
    }
    at += size;
  }
  Weights w = random_weights(m, 20, rng);
  return build_instance(std::move(g), DepDigraph(m, std::move(a)), std::move(b),
                        std::move(w), "partition-" + std::to_string(seed));
}

Cnf random_322_cnf(int variables, int clauses, std::uint64_t seed) {
  if (variables < 2 || clauses < 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two variables");
  }
  Rng rng(seed);
  Cnf cnf{variables, {}};
  std::vector<int> pos(idx(variables + 1), 0);
  std::vector<int> neg(idx(variables + 1), 0);
  for (int c = 0; c < clauses; ++c) {
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      const int width = std::min(variables, uniform_int(rng, 2, 3));
      std::vector<int> vars(idx(variables));
      std::iota(vars.begin(), vars.end(), 1);
      shuffle(vars, rng);
      std::vector<int> clause;
      for (int i = 0; i < width; ++i) {
        const int x = vars[idx(i)];
        clause.push_back(uniform_below(rng, 2) == 0 ? x : -x);
      }
      const bool fits = std::all_of(clause.begin(), clause.end(), [&](int lit) {
        return lit > 0 ? pos[idx(lit)] < 2 : neg[idx(-lit)] < 2;
      });
      if (!fits) continue;
      for (int lit : clause) ++(lit > 0 ? pos[idx(lit)] : neg[idx(-lit)]);
      cnf.clauses.push_back(std::move(clause));
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::kUnreachableTarget,
                  std::to_string(clauses) + " clauses do not fit " +
                      std::to_string(variables) + " variables");
    }
  }
  return cnf;
}

namespace {

using Clause = std::vector<int>;

std::vector<Clause> clause_types(int vars) {
  std::vector<Clause> out;
  for (int width = 2; width <= 3; ++width) {
    for (int mask = 0; mask < (1 << vars); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != width) continue;
      std::vector<int> chosen;
      for (int x = 0; x < vars; ++x) {
        if (mask & (1 << x)) chosen.push_back(x + 1);
      }
      for (int signs = 0; signs < (1 << width); ++signs) {
        Clause c;
        for (int i = 0; i < width; ++i) c.push_back((signs >> i) & 1 ? -chosen[idx(i)] : chosen[idx(i)]);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<Clause> normalized(std::vector<Clause> clauses) {
  for (auto& c : clauses) std::sort(c.begin(), c.end());
  std::sort(clauses.begin(), clauses.end());
  return clauses;
}

bool is_canonical(const Cnf& cnf) {
  const int v = cnf.variable_count;
  const std::vector<Clause> self = normalized(cnf.clauses);
  std::vector<int> perm(idx(v));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int flips = 0; flips < (1 << v); ++flips) {
      std::vector<Clause> image = cnf.clauses;
      for (auto& c : image) {
        for (int& lit : c) {
          const int x = lit < 0 ? -lit : lit;
          const int y = perm[idx(x - 1)];
          const bool flip = (flips >> (x - 1)) & 1;
          lit = (lit < 0) != flip ? -y : y;
        }
      }
      if (normalized(std::move(image)) < self) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

void extend(const std::vector<Clause>& types, size_t from, int budget, Cnf& current,
            std::vector<int>& pos, std::vector<int>& neg, bool canonical_only,
            std::vector<Cnf>& out) {
  if (!current.clauses.empty() && (!canonical_only || is_canonical(current))) {
    out.push_back(current);
  }
  if (budget == 0) return;
  for (size_t t = from; t < types.size(); ++t) {
    const Clause& c = types[t];
    bool fits = true;
    for (int lit : c) {
      if ((lit > 0 ? pos[idx(lit)] : neg[idx(-lit)]) >= 2) fits = false;
    }
    if (!fits) continue;
    for (int lit : c) ++(lit > 0 ? pos[idx(lit)] : neg[idx(-lit)]);
    current.clauses.push_back(c);
    extend(types, t, budget - 1, current, pos, neg, canonical_only, out);
    current.clauses.pop_back();
    for (int lit : c) --(lit > 0 ? pos[idx(lit)] : neg[idx(-lit)]);
  }
}

}  // namespace

std::vector<Cnf> small_322_corpus(int max_vars, int max_clauses, bool canonical_only) {
  std::vector<Cnf> out;
  for (int v = 1; v <= max_vars; ++v) {
    const std::vector<Clause> types = clause_types(v);
    Cnf current{v, {}};
    std::vector<int> pos(idx(v + 1), 0);
    std::vector<int> neg(idx(v + 1), 0);
    extend(types, 0, max_clauses, current, pos, neg, canonical_only, out);
  }
  return out;
}

SourceProblem random_source_problem(SourceKind kind, int n, int m, int k,
                                    std::uint64_t seed, bool weighted) {
  Rng rng(seed);
  SourceProblem p;
  p.kind = kind;
  p.graph = random_connected_graph(n, m, rng);
  const std::vector<int> deg = p.graph.degrees();
  switch (kind) {
    case SourceKind::kCcst:
    case SourceKind::kFcst: {
      std::set<EdgePair> seen;
      const long long possible = static_cast<long long>(m) * (m - 1) / 2;
      while (static_cast<long long>(seen.size()) < std::min<long long>(k, possible)) {
        int a = uniform_int(rng, 0, m - 1);
        int b = uniform_int(rng, 0, m - 1);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (seen.insert({a, b}).second) p.pairs.emplace_back(a, b);
      }
      break;
    }
    case SourceKind::kMdst:
      p.upper.assign(idx(n), k);
      break;
    case SourceKind::kMinDegree:
      p.lower.assign(idx(n), k);
      p.upper = deg;
      break;
    case SourceKind::kFmdst:
      p.in_c.assign(idx(n), false);
      p.lower.assign(idx(n), 0);
      for (VertexId v = 0; v < n; ++v) {
        p.in_c[idx(v)] = uniform_below(rng, 2) == 1;
        if (p.in_c[idx(v)]) p.lower[idx(v)] = std::max(1, std::min(k, deg[idx(v)]));
      }
      break;
  }
  if (weighted) p.weights = random_weights(m, 20, rng);
  return p;
}

}  // namespace gdcst
