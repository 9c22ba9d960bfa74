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


#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdcst/cnf.hpp"
#include "gdcst/error.hpp"
#include "gdcst/generators.hpp"
#include "gdcst/graph.hpp"
#include "gdcst/io.hpp"
#include "gdcst/oracle.hpp"
#include "gdcst/reductions.hpp"
#include "gdcst/solver.hpp"
#include "nlohmann/json.hpp"

namespace gdcst::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on '" + path + "'");
  return buf.str();
}

// Empty path means `out`.
void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write failed on '" + path + "'");
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

json report_json(const SolveReport& r) {
  json j;
  j["verdict"] = std::string(verdict_name(r.verdict));
  if (r.witness) {
    json ids = json::array();
    for (EdgeId e : *r.witness) ids.push_back(e + 1);
    j["witness"] = ids;
  } else {
    j["witness"] = nullptr;
  }
  j["weight"] = r.optimal_weight ? json(*r.optimal_weight) : json(nullptr);
  j["path"] = std::string(solver_path_name(r.path));
  j["stats"] = {{"nodes", r.stats.nodes},
                {"oracle_calls", r.stats.oracle_calls},
                {"ms", r.stats.ms}};
  return j;
}

void print_report(const SolveReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report_json(r).dump(2) << "\n";
    return;
  }
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  out << "path: " << solver_path_name(r.path) << "\n";
  if (r.witness) {
    out << "witness:";
    for (EdgeId e : *r.witness) out << " " << e + 1;
    out << "\n";
  }
  if (r.optimal_weight) out << "weight: " << *r.optimal_weight << "\n";
  out << "nodes: " << r.stats.nodes << "\noracle_calls: " << r.stats.oracle_calls
      << "\nms: " << std::fixed << std::setprecision(3) << r.stats.ms << "\n";
  out << std::defaultfloat;
}

int verdict_exit(const SolveReport& r) {
  return r.feasible() ? kExitOk : kExitNegative;
}

struct SolveArgs {
  std::string file;
  bool optimize = false;
  std::string force_path;
  bool json = false;
  int max_edges = 25;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.file);
  SolveReport r;
  if (a.force_path.empty()) {
    r = solve(inst, a.optimize);
  } else if (a.force_path == "generic") {
    r = solve_generic(inst, a.optimize);
  } else if (a.force_path == "matching") {
    if (!detect_matching_case(inst)) {
      throw Error(ErrorCode::kInvalidArgument, "instance is not a matching case");
    }
    if (a.optimize && inst.is_weighted()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "the matching path decides feasibility only");
    }
    r = solve_matching_case(inst);
  } else if (a.force_path == "partition") {
    if (!detect_partition_case(inst)) {
      throw Error(ErrorCode::kInvalidArgument, "instance is not a partition case");
    }
    r = solve_partition_case(inst, a.optimize);
  } else {
    r = oracle_solve(inst, a.optimize, OracleOptions{OracleMode::kTrees, a.max_edges});
  }
  assert_report_consistent(inst, r);
  print_report(r, a.json, out);
  return verdict_exit(r);
}

struct ValidateArgs {
  std::string file;
  std::vector<int> tree;
};

int run_validate(const ValidateArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.file);
  std::vector<EdgeId> ids;
  for (int id : a.tree) {
    if (id < 1 || id > inst.edge_count()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge id " + std::to_string(id) + " outside 1.." +
                      std::to_string(inst.edge_count()));
    }
    ids.push_back(id - 1);
  }
  const EdgeSet s = EdgeSet::from_ids(ids);
  const ValidationReport v = satisfies(inst, s);
  out << "spanning tree: " << (v.is_spanning_tree ? "yes" : "no") << "\n";
  if (v.first_violation) {
    const EdgeId e = *v.first_violation;
    int count = 0;
    for (const auto& [id, c] : v.dependency_counts) {
      if (id == e) count = c;
    }
    out << "bounds: violated at edge " << e + 1 << " (" << count << " not in ["
        << inst.lower(e) << "," << inst.upper(e) << "])\n";
  } else {
    out << "bounds: ok\n";
  }
  if (v.pass() && inst.is_weighted()) {
    out << "weight: " << total_weight(inst, s) << "\n";
  }
  out << "valid: " << (v.pass() ? "yes" : "no") << "\n";
  return v.pass() ? kExitOk : kExitNegative;
}

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string output;
  int c = 1;
  std::uint64_t seed = 0;
  bool roles = false;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  const auto kind = parse_reduction_kind(a.kind);
  if (!kind) throw UsageError("unknown reduction kind '" + a.kind + "'");
  const std::string text = read_file(a.input);
  ReductionOutput r = [&] {
    if (*kind == ReductionKind::kLift) return lift_bounds(parse_instance(text), a.c);
    SourceProblem p = parse_source_problem(text);
    if (reduction_kind_token(*kind) != source_kind_token(p.kind)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "input is a " + std::string(source_kind_token(p.kind)) +
                      " problem, not " + a.kind);
    }
    return reduce(p, ReduceOptions{a.c, a.seed});
  }();
  std::string text_out;
  if (a.roles) {
    for (size_t i = 0; i < r.edge_roles.size(); ++i) {
      text_out += "# e" + std::to_string(i + 1) + " " + r.edge_roles[i] + "\n";
    }
  }
  text_out += render_instance(r.instance);
  write_text(a.output, text_out, out);
  return kExitOk;
}

struct GenerateArgs {
  std::string variant;
  std::string input;
  std::string output;
  GenParams params;
  std::string mode = "dep";
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
  std::string text;
  if (a.variant == "random") {
    GenParams p = a.params;
    if (a.mode == "zero") {
      p.mode = BoundMode::kZero;
    } else if (a.mode == "dep") {
      p.mode = BoundMode::kDep;
    } else if (a.mode == "random") {
      p.mode = BoundMode::kRandom;
    } else {
      throw UsageError("unknown bound mode '" + a.mode + "'");
    }
    text = render_instance(random_instance(p));
  } else {
    std::optional<SatVariant> v;
    for (SatVariant s : {SatVariant::kOutstars, SatVariant::kPaths,
                         SatVariant::kInstars}) {
      if (sat_variant_token(s) == a.variant) v = s;
    }
    if (!v) throw UsageError("unknown generator '" + a.variant + "'");
    if (a.input.empty()) throw UsageError(a.variant + " needs a CNF input file");
    const GeneratedInstance g = sat_to_gdcst(parse_dimacs_cnf(read_file(a.input)), *v);
    for (const std::string& note : g.notes) text += "# " + note + "\n";
    text += render_instance(g.instance);
  }
  write_text(a.output, text, out);
  return kExitOk;
}

struct OracleArgs {
  std::string file;
  bool optimize = false;
  std::string mode = "trees";
  bool json = false;
  int max_edges = 25;
};

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.file);
  OracleOptions options;
  options.mode = a.mode == "subsets" ? OracleMode::kSubsets : OracleMode::kTrees;
  options.max_edges = a.max_edges;
  const SolveReport r = oracle_solve(inst, a.optimize, options);
  print_report(r, a.json, out);
  return verdict_exit(r);
}

int run_export_dot(const std::string& file, bool deps, const std::string& output,
                   std::ostream& out) {
  write_text(output, render_dot(load_instance(file), deps), out);
  return kExitOk;
}

int run_stats(const std::string& file, std::ostream& out) {
  const Instance inst = load_instance(file);
  int out_max = 0;
  int in_max = 0;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    out_max = std::max(out_max, static_cast<int>(inst.dependents(e).size()));
    in_max = std::max(in_max, static_cast<int>(inst.dep(e).size()));
  }
  const char* special = detect_matching_case(inst)    ? "matching"
                        : detect_partition_case(inst) ? "partition"
                                                      : "none";
  out << "n=" << inst.vertex_count() << " m=" << inst.edge_count()
      << " |A|=" << inst.deps().arc_count() << "\n";
  out << "special case: " << special << "; Δ⁺=" << out_max << ", Δ⁻=" << in_max
      << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Dependency-constrained spanning tree toolkit", "gdcst"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gdcst 0.1.0");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide or optimize an instance");
  solve_cmd->add_option("file", solve_args.file, "Instance file")->required();
  solve_cmd->add_flag("--optimize", solve_args.optimize, "Minimize total weight");
  solve_cmd->add_option("--force-path", solve_args.force_path, "Solver to use")
      ->check(CLI::IsMember({"generic", "matching", "partition", "oracle"}));
  solve_cmd->add_flag("--json", solve_args.json, "JSON report");
  solve_cmd->add_option("--max-edges", solve_args.max_edges, "Edge cap for the oracle path");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Check a candidate tree");
  validate_cmd->add_option("file", validate_args.file, "Instance file")->required();
  validate_cmd->add_option("--tree", validate_args.tree, "Comma-separated edge ids")
      ->required()
      ->delimiter(',');

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Embed a source problem");
  reduce_cmd->add_option("kind", reduce_args.kind, "ccst|fcst|mdst|mindeg|fmdst|lift")
      ->required();
  reduce_cmd->add_option("input", reduce_args.input, "Source problem or instance file")
      ->required();
  reduce_cmd->add_option("-o,--output", reduce_args.output, "Output file");
  reduce_cmd->add_option("--c", reduce_args.c, "Lift amount or ccst pendant count");
  reduce_cmd->add_option("--seed", reduce_args.seed, "Orientation seed");
  reduce_cmd->add_flag("--roles", reduce_args.roles, "Prefix edge role comments");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Emit an instance");
  gen_cmd->add_option("variant", gen_args.variant, "outstars|paths|instars|random")
      ->required();
  gen_cmd->add_option("input", gen_args.input, "DIMACS CNF file");
  gen_cmd->add_option("-o,--output", gen_args.output, "Output file");
  gen_cmd->add_option("--n", gen_args.params.n, "Vertices");
  gen_cmd->add_option("--m", gen_args.params.m, "Edges");
  gen_cmd->add_option("--density", gen_args.params.arc_density, "Arc probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--mode", gen_args.mode, "zero|dep|random");
  gen_cmd->add_option("--seed", gen_args.params.seed, "Seed");
  gen_cmd->add_flag("--weighted", gen_args.params.weighted, "Random weights");
  gen_cmd->add_option("--max-weight", gen_args.params.max_weight, "Largest weight");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference");
  oracle_cmd->add_option("file", oracle_args.file, "Instance file")->required();
  oracle_cmd->add_flag("--optimize", oracle_args.optimize, "Minimize total weight");
  oracle_cmd->add_option("--mode", oracle_args.mode, "trees|subsets")
      ->check(CLI::IsMember({"trees", "subsets"}));
  oracle_cmd->add_flag("--json", oracle_args.json, "JSON report");
  oracle_cmd->add_option("--max-edges", oracle_args.max_edges, "Edge cap");

  std::string dot_file;
  std::string dot_output;
  bool dot_deps = false;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering");
  dot_cmd->add_option("file", dot_file, "Instance file")->required();
  dot_cmd->add_flag("--deps", dot_deps, "Also render D");
  dot_cmd->add_option("-o,--output", dot_output, "Output file");

  std::string stats_file;
  auto* stats_cmd = app.add_subcommand("stats", "Sizes and structure of D");
  stats_cmd->add_option("file", stats_file, "Instance file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, out);
    if (*validate_cmd) return run_validate(validate_args, out);
    if (*reduce_cmd) return run_reduce(reduce_args, out);
    if (*gen_cmd) return run_generate(gen_args, out);
    if (*oracle_cmd) return run_oracle(oracle_args, out);
    if (*dot_cmd) return run_export_dot(dot_file, dot_deps, dot_output, out);
    if (*stats_cmd) return run_stats(stats_file, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace gdcst::cli
