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


// Acceptance run: one PASS/FAIL line per criterion. Every reference value
// comes from an exhaustive oracle; all comparisons are exact integers.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cli_scenarios.hpp"
#include "gdcst/cnf.hpp"
#include "gdcst/generators.hpp"
#include "gdcst/io.hpp"
#include "gdcst/matroid.hpp"
#include "gdcst/oracle.hpp"
#include "gdcst/reductions.hpp"
#include "gdcst/solver.hpp"
#include "test_support.hpp"

namespace gdcst {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few mismatches.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  int total() const { return total_; }
  int failed() const { return failed_; }

  Outcome outcome(const std::string& unit) const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " " << unit;
    if (failed_ > 0) s << " [" << first_ << "]";
    return Outcome{failed_ == 0 && total_ > 0, s.str()};
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_;
};

std::string seed_tag(const char* what, std::uint64_t seed) {
  return std::string(what) + " seed " + std::to_string(seed);
}

bool witness_ok(const Instance& inst, const SolveReport& r) {
  try {
    assert_report_consistent(inst, r);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

int random_edge_count(Rng& rng, int n, int cap) {
  return uniform_int(rng, n - 1, std::min(cap, n * (n - 1) / 2));
}

// 1. solve() against the oracle on mixed random instances.
Outcome solver_oracle() {
  Tally t;
  int feasible = 0;
  Rng rng(1001);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    GenParams p;
    p.n = uniform_int(rng, 2, 7);
    p.m = random_edge_count(rng, p.n, 12);
    p.arc_density = 0.1 * static_cast<double>(uniform_int(rng, 0, 3));
    p.mode = static_cast<BoundMode>(seed % 3);
    p.weighted = seed % 2 == 0;
    p.seed = seed;
    const Instance inst = random_instance(p);
    const SolveReport got = solve(inst, true);
    const SolveReport want = oracle_solve(inst, true);
    if (want.feasible()) ++feasible;
    t.check(got.verdict == want.verdict && got.optimal_weight == want.optimal_weight &&
                witness_ok(inst, got),
            seed_tag("instance", seed));
  }
  return t.outcome("instances agree (" + std::to_string(feasible) + " feasible)");
}

// Core graph plus pendant bridges, each pendant depending on a distinct core
// edge; infeasible exactly when those core edges contain a cycle.
Instance pendant_matching_instance(std::uint64_t seed) {
  Rng local(seed);
  const int core = uniform_int(local, 3, 5);
  const int core_m = uniform_int(local, core, core * (core - 1) / 2);
  const Graph base = random_connected_graph(core, core_m, local);
  const int pendants = uniform_int(local, 1, std::min({core_m, 8 - core, 12 - core_m}));
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  std::vector<EdgeId> tails(static_cast<size_t>(core_m));
  for (EdgeId e = 0; e < core_m; ++e) tails[static_cast<size_t>(e)] = e;
  std::shuffle(tails.begin(), tails.end(), local);
  std::vector<Arc> arcs;
  Bounds b = Bounds::zeros(core_m + pendants);
  for (int i = 0; i < pendants; ++i) {
    edges.push_back({uniform_int(local, 0, core - 1), core + i});
    const EdgeId head = core_m + i;
    arcs.push_back({tails[static_cast<size_t>(i)], head});
    b.lower[static_cast<size_t>(head)] = b.upper[static_cast<size_t>(head)] = 1;
  }
  const int m = core_m + pendants;
  return build_instance(Graph(core + pendants, edges), DepDigraph(m, arcs), b);
}

// 2. Oriented-matching D with ℓ = u = |dep|.
Outcome matching_case() {
  Tally t;
  int feasible = 0;
  Rng rng(2002);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = uniform_int(rng, 3, 7);
    const int m = random_edge_count(rng, n, 12);
    const int arcs = uniform_int(rng, 1, std::max(1, m / 2));
    const Instance inst = seed % 2 == 0
                              ? random_matching_instance(n, m, arcs, seed, seed % 4 == 0)
                              : pendant_matching_instance(seed);
    if (!detect_matching_case(inst)) {
      t.check(false, seed_tag("not detected", seed));
      continue;
    }
    const SolveReport got = solve_matching_case(inst);
    const SolveReport want = oracle_solve(inst, false);
    if (want.feasible()) ++feasible;
    bool ok = got.verdict == want.verdict && got.path == SolverPath::kMatchingCase;
    if (got.feasible()) {
      ok = ok && got.witness && satisfies(inst, *got.witness).pass() &&
           is_spanning_tree(inst.graph(), *got.witness);
    }
    ok = ok && solve(inst, false).path == SolverPath::kMatchingCase;
    t.check(ok, seed_tag("instance", seed));
  }
  return t.outcome("instances agree (" + std::to_string(feasible) + " feasible)");
}

// 3. Symmetric-clique D with per-clique u; weighted optimum.
Outcome partition_case() {
  Tally t;
  Rng rng(3003);
  int feasible = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = uniform_int(rng, 3, 7);
    const int m = random_edge_count(rng, n, 12);
    const Instance inst = random_partition_instance(n, m, seed);
    if (!detect_partition_case(inst)) {
      t.check(false, seed_tag("not detected", seed));
      continue;
    }
    const SolveReport got = solve_partition_case(inst, true);
    const SolveReport want = oracle_solve(inst, true);
    if (want.feasible()) ++feasible;
    t.check(got.verdict == want.verdict && got.optimal_weight == want.optimal_weight &&
                got.path == SolverPath::kPartitionCase && witness_ok(inst, got),
            seed_tag("instance", seed));
  }
  return t.outcome("optima agree (" + std::to_string(feasible) + " feasible)");
}

std::vector<Cnf> sat_corpus() {
  std::vector<Cnf> corpus = small_322_corpus(3, 4, false);
  Rng rng(4004);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int vars = uniform_int(rng, 2, 4);
    const int clauses = uniform_int(rng, 1, vars + 1);
    corpus.push_back(random_322_cnf(vars, clauses, seed));
  }
  return corpus;
}

constexpr SatVariant kVariants[] = {SatVariant::kOutstars, SatVariant::kPaths,
                                    SatVariant::kInstars};

// 4. brute_sat against the oracle on every encoding.
Outcome sat_round_trips() {
  Tally t;
  const std::vector<Cnf> corpus = sat_corpus();
  int sat = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const bool want = brute_sat(corpus[i]);
    if (want) ++sat;
    for (SatVariant v : kVariants) {
      const Instance inst = sat_to_gdcst(corpus[i], v).instance;
      const bool got = oracle_solve(inst, false, {OracleMode::kTrees, 256}).feasible();
      t.check(got == want, "formula " + std::to_string(i) + " " +
                               std::string(sat_variant_token(v)));
    }
  }
  return t.outcome("encodings agree over " + std::to_string(corpus.size()) +
                   " formulas (" + std::to_string(sat) + " satisfiable)");
}

// 5. Structure of every generated instance.
Outcome generator_audits() {
  Tally t;
  const std::vector<Cnf> corpus = sat_corpus();
  for (size_t i = 0; i < corpus.size(); ++i) {
    const std::string tag = "formula " + std::to_string(i);
    const Instance out = sat_to_gdcst_outstars(corpus[i]).instance;
    const StructureReport s = check_structure(out.graph());
    t.check(s.is_chordal && s.diameter && *s.diameter <= 2 &&
                testing::is_out_star_forest(out) && testing::max_out_degree(out) <= 2,
            tag + " outstars");
    const Instance paths = sat_to_gdcst_paths(corpus[i]).instance;
    t.check(testing::max_out_degree(paths) <= 1 && testing::max_in_degree(paths) <= 1,
            tag + " paths");
    const Instance in = sat_to_gdcst_instars(corpus[i]).instance;
    t.check(testing::is_in_star_forest(in) && testing::max_in_degree(in) <= 2,
            tag + " instars");
  }
  return t.outcome("generated instances pass");
}

// 6. Source oracle against solve() on the reduced instance.
Outcome reduction_equivalence() {
  struct Config {
    SourceKind kind;
    int k;      // pairs, cap or lower degree
    int c;      // ccst pendants
    const char* label;
  };
  const Config configs[] = {
      {SourceKind::kCcst, 3, 0, "ccst c=0"},   {SourceKind::kCcst, 3, 1, "ccst c=1"},
      {SourceKind::kCcst, 3, 2, "ccst c=2"},   {SourceKind::kFcst, 3, 1, "fcst"},
      {SourceKind::kMdst, 2, 1, "mdst"},       {SourceKind::kMinDegree, 2, 1, "mindeg k=2"},
      {SourceKind::kMinDegree, 3, 1, "mindeg k=3"}, {SourceKind::kFmdst, 2, 1, "fmdst"},
  };
  Tally t;
  Rng rng(6006);
  int feasible = 0;
  for (const Config& cfg : configs) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const int n = uniform_int(rng, 3, 6);
      const int m = random_edge_count(rng, n, 8);
      const SourceProblem p = random_source_problem(cfg.kind, n, m, cfg.k, seed, seed % 2 == 0);
      const ReductionOutput out = reduce(p, {cfg.c, seed});
      const SourceOptimum want = source_oracle(p, true);
      const SolveReport got = solve(out.instance, true);
      if (want.feasible) ++feasible;
      bool ok = got.feasible() == want.feasible && got.optimal_weight == want.weight;
      if (ok && got.feasible()) {
        ok = check_source_solution(p, pull_back(out, *got.witness));
      }
      t.check(ok, std::string(cfg.label) + " seed " + std::to_string(seed));
    }
  }
  return t.outcome("source instances agree (" + std::to_string(feasible) + " feasible)");
}

// Constant ℓ on dependent edges, u(e) = min(U, |dep(e)|).
Instance constant_bound_instance(std::uint64_t seed, Rng& rng) {
  const int n = uniform_int(rng, 3, 6);
  const int m = random_edge_count(rng, n, 8);
  Rng local(seed);
  const Graph g = random_connected_graph(n, m, local);
  std::vector<Arc> arcs;
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = 0; b < m; ++b) {
      if (a != b && uniform_unit(local) < 0.3) arcs.push_back({a, b});
    }
  }
  std::vector<int> dep_size(static_cast<size_t>(m), 0);
  for (const Arc& a : arcs) ++dep_size[static_cast<size_t>(a.head)];
  int min_dep = 1 << 20;
  int max_dep = 0;
  for (int d : dep_size) {
    if (d > 0) min_dep = std::min(min_dep, d);
    max_dep = std::max(max_dep, d);
  }
  if (max_dep == 0) min_dep = 0;
  const int lo = uniform_int(local, 0, min_dep);
  const int hi = uniform_int(local, lo, max_dep);
  Bounds b = Bounds::zeros(m);
  for (size_t e = 0; e < static_cast<size_t>(m); ++e) {
    if (dep_size[e] == 0) continue;
    b.lower[e] = lo;
    b.upper[e] = std::min(hi, dep_size[e]);
  }
  return build_instance(g, DepDigraph(m, arcs), b);
}

// 7. Lifting preserves feasibility.
Outcome lifting() {
  Tally t;
  Rng rng(7007);
  int feasible = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = constant_bound_instance(seed, rng);
    const bool want = oracle_solve(inst, false).feasible();
    if (want) ++feasible;
    for (int c : {1, 2}) {
      const ReductionOutput out = lift_bounds(inst, c);
      const bool got = oracle_solve(out.instance, false).feasible();
      t.check(got == want, seed_tag("instance", seed) + " c=" + std::to_string(c));
    }
  }
  return t.outcome("lifted instances agree (" + std::to_string(feasible) + "/200 feasible)");
}

// Library matroids only; test-side uniform matroids are excluded.
std::unique_ptr<Matroid> library_matroid(int ground, Rng& rng) {
  for (;;) {
    auto m = testing::random_matroid(ground, rng);
    if (dynamic_cast<OracleMatroid*>(m.get()) == nullptr) return m;
  }
}

// 8. Axioms and intersection against exhaustion.
Outcome matroid_suite() {
  Tally t;
  Rng rng(8008);
  for (int i = 0; i < 300; ++i) {
    const int ground = uniform_int(rng, 0, 8);
    const auto m = library_matroid(ground, rng);
    std::string why;
    t.check(testing::check_matroid_axioms(*m, &why), "axioms: " + why);
  }
  for (int i = 0; i < 200; ++i) {
    const int ground = uniform_int(rng, 1, 10);
    const auto a = testing::random_matroid(ground, rng);
    const auto b = testing::random_matroid(ground, rng);
    const auto got = max_common_independent(*a, *b);
    t.check(a->is_independent(got) && b->is_independent(got) &&
                static_cast<int>(got.size()) == testing::exhaustive_max_common(*a, *b),
            "max common pair " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const int ground = uniform_int(rng, 1, 9);
    const auto a = testing::random_matroid(ground, rng);
    const auto b = testing::random_matroid(ground, rng);
    std::vector<Weight> w(static_cast<size_t>(ground));
    for (auto& x : w) x = uniform_int(rng, -5, 20);
    bool ok = true;
    for (int size = 0; size <= ground; ++size) {
      const auto got = min_weight_common_independent_of_size(*a, *b, w, size);
      const auto want = testing::exhaustive_min_weight(*a, *b, w, size);
      if (got.has_value() != want.has_value()) {
        ok = false;
        break;
      }
      if (!got) continue;
      Weight total = 0;
      for (Element e : *got) total += w[static_cast<size_t>(e)];
      ok = ok && static_cast<int>(got->size()) == size && total == *want &&
           a->is_independent(*got) && b->is_independent(*got);
    }
    t.check(ok, "weighted pair " + std::to_string(i));
  }
  return t.outcome("matroid checks");
}

// 9. Exhaustive modes stay within their budgets.
Outcome exponential_contract() {
  GenParams p;
  p.n = 8;
  p.m = 20;
  p.arc_density = 0.1;
  p.mode = BoundMode::kRandom;
  p.weighted = true;
  p.seed = 2026;
  const Instance inst = random_instance(p);
  const auto start = std::chrono::steady_clock::now();
  const SolveReport subsets = oracle_solve(inst, true, {OracleMode::kSubsets, 20});
  const double subset_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const SolveReport trees = oracle_solve(inst, true, {OracleMode::kTrees, 20});
  bool ok = subsets.stats.nodes <= (std::int64_t{1} << 20) && subset_s < 60.0 &&
            subsets.verdict == trees.verdict &&
            subsets.optimal_weight == trees.optimal_weight;

  const Graph k7 = testing::complete_graph(7);
  Weights w(static_cast<size_t>(k7.edge_count()));
  for (size_t e = 0; e < w.size(); ++e) w[e] = static_cast<Weight>((e * 7) % 11);
  const Instance k7_inst =
      build_instance(k7, DepDigraph(k7.edge_count(), {}), Bounds::zeros(k7.edge_count()), w);
  const auto k7_start = std::chrono::steady_clock::now();
  const SolveReport k7_report = oracle_solve(k7_inst, true);
  const double k7_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - k7_start).count();
  ok = ok && k7_report.stats.nodes == 16807 && count_spanning_trees(k7) == 16807 &&
       k7_s < 1.0 && k7_report.optimal_weight == testing::kruskal_weight(k7, w);

  std::ostringstream s;
  s.precision(3);
  s << "subsets mode " << subsets.stats.nodes << " <= 2^20 in " << subset_s
    << " s; K7 " << k7_report.stats.nodes << " trees in " << k7_s << " s";
  return Outcome{ok, s.str()};
}

// 10. Fixture round trips and the CLI golden script.
Outcome io_contract() {
  Tally t;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(GDCST_FIXTURE_DIR)) {
    const std::string path = entry.path().string();
    const std::string ext = entry.path().extension().string();
    try {
      if (ext == ".gdcst") {
        const std::string text = testing::read_text(path);
        t.check(render_instance(parse_instance(text)) == text, path);
      } else if (ext == ".gdsrc") {
        const std::string text = testing::read_text(path);
        t.check(render_source_problem(parse_source_problem(text)) == text, path);
      } else if (ext == ".cnf") {
        const Cnf c = parse_dimacs_cnf(testing::read_text(path));
        const std::string canon = render_dimacs_cnf(c);
        t.check(render_dimacs_cnf(parse_dimacs_cnf(canon)) == canon, path);
      }
    } catch (const std::exception& e) {
      t.check(false, path + ": " + e.what());
    }
  }
  const int files = t.total();
  const auto scratch = std::filesystem::temp_directory_path() / "gdcst_acceptance";
  for (const auto& r : testing::run_cli_scenarios(GDCST_FIXTURE_DIR, scratch.string())) {
    t.check(r.ok(), "script line " + std::to_string(r.line));
  }
  Outcome o = t.outcome("checks");
  o.detail += " (" + std::to_string(files) + " fixtures, " +
              std::to_string(t.total() - files) + " CLI scenarios)";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace gdcst

int main() {
  using gdcst::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "solver/oracle equivalence", 60, gdcst::solver_oracle},
      {2, "matching case", 30, gdcst::matching_case},
      {3, "partition case", 60, gdcst::partition_case},
      {4, "SAT round trips", 120, gdcst::sat_round_trips},
      {5, "generator structure", 120, gdcst::generator_audits},
      {6, "reduction equivalence", 120, gdcst::reduction_equivalence},
      {7, "lifting equivalence", 120, gdcst::lifting},
      {8, "matroid suite", 120, gdcst::matroid_suite},
      {9, "exponential contract", 60, gdcst::exponential_contract},
      {10, "I/O and CLI", 60, gdcst::io_contract},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    gdcst::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = gdcst::Outcome{false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && s <= c.limit_s;
    if (!pass) ++failures;
    std::printf("%s criterion %d (%s): %s; %.2f s, limit %.0f s\n", pass ? "PASS" : "FAIL",
                c.id, c.name, o.detail.c_str(), s, c.limit_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
