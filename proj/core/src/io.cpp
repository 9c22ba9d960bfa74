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

#include "gdcst/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "gdcst/error.hpp"

namespace gdcst {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

long long to_int(const Line& line, size_t i) {
  const std::string& t = line.tokens[i];
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
    fail(line.number, "expected an integer, got `" + t + "`");
  }
  return v;
}

int to_count(const Line& line, size_t i) {
  const long long v = to_int(line, i);
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    fail(line.number, "value `" + line.tokens[i] + "` out of range");
  }
  return static_cast<int>(v);
}

// 1-based id on the wire -> 0-based.
int to_id(const Line& line, size_t i, int count, const char* what) {
  const long long v = to_int(line, i);
  if (v < 1 || v > count) {
    fail(line.number, std::string(what) + " " + line.tokens[i] + " outside 1.." +
                          std::to_string(count));
  }
  return static_cast<int>(v - 1);
}

void expect_arity(const Line& line, size_t lo, size_t hi) {
  if (line.tokens.size() < lo || line.tokens.size() > hi) {
    fail(line.number, "wrong number of fields for `" + line.tokens[0] + "`");
  }
}

// Header plus edge lines shared by both formats. Returns the remaining lines.
struct EdgeSection {
  std::string kind;
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
  std::optional<Weights> weights;
  std::vector<Line> rest;
};

EdgeSection read_edges(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty input");
  const Line& header = lines.front();
  if (header.tokens[0] != "p" || header.tokens.size() != 4) {
    fail(header.number, "expected `p <kind> <n> <m>` header");
  }
  EdgeSection s;
  s.kind = header.tokens[1];
  s.n = to_count(header, 2);
  s.m = to_count(header, 3);
  if (s.n < 1) fail(header.number, "need at least one vertex");
  std::set<std::pair<int, int>> seen;
  int unweighted = 0;
  int weighted_lines = 0;
  Weights w;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "p") fail(line.number, "duplicate header");
    if (line.tokens[0] != "e") {
      s.rest.push_back(line);
      continue;
    }
    expect_arity(line, 3, 4);
    if (static_cast<int>(s.edges.size()) == s.m) {
      fail(line.number, "more than " + std::to_string(s.m) + " edges");
    }
    const int u = to_id(line, 1, s.n, "vertex");
    const int v = to_id(line, 2, s.n, "vertex");
    if (u == v) fail(line.number, "loop at vertex " + line.tokens[1]);
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      fail(line.number, "duplicate edge " + line.tokens[1] + " " + line.tokens[2]);
    }
    if (line.tokens.size() == 4) {
      ++weighted_lines;
      w.push_back(to_int(line, 3));
    } else {
      ++unweighted;
    }
    if (weighted_lines > 0 && unweighted > 0) {
      fail(line.number, "mixed weighted and unweighted edges");
    }
    s.edges.push_back(Edge{u, v});
  }
  if (static_cast<int>(s.edges.size()) != s.m) {
    fail(header.number, "header declares " + std::to_string(s.m) + " edges, found " +
                            std::to_string(s.edges.size()));
  }
  if (weighted_lines > 0) s.weights = std::move(w);
  return s;
}

std::string edge_lines(const Graph& g, const std::optional<Weights>& weights) {
  std::string out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out += "e " + std::to_string(g.edge(e).u + 1) + " " + std::to_string(g.edge(e).v + 1);
    if (weights) out += " " + std::to_string((*weights)[idx(e)]);
    out += "\n";
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text, std::string name) {
  EdgeSection s = read_edges(text);
  if (s.kind != "gdcst") fail(1, "expected `p gdcst`, got `p " + s.kind + "`");
  std::vector<Arc> arcs;
  std::set<std::pair<int, int>> seen_arcs;
  Bounds b{std::vector<int>(idx(s.m), 0),
           std::vector<int>(idx(s.m), std::numeric_limits<int>::max())};
  std::vector<bool> bounded(idx(s.m), false);
  for (const Line& line : s.rest) {
    const std::string& tag = line.tokens[0];
    if (tag == "d") {
      expect_arity(line, 3, 3);
      const int t = to_id(line, 1, s.m, "edge");
      const int h = to_id(line, 2, s.m, "edge");
      if (t == h) fail(line.number, "self-arc on edge " + line.tokens[1]);
      if (!seen_arcs.insert({t, h}).second) fail(line.number, "duplicate arc");
      arcs.push_back(Arc{t, h});
    } else if (tag == "b") {
      expect_arity(line, 4, 4);
      const int e = to_id(line, 1, s.m, "edge");
      const int lo = to_count(line, 2);
      const int hi = to_count(line, 3);
      if (lo > hi) fail(line.number, "lower bound exceeds upper bound (ℓ > u)");
      if (bounded[idx(e)]) fail(line.number, "second bound line for edge " + line.tokens[1]);
      bounded[idx(e)] = true;
      b.lower[idx(e)] = lo;
      b.upper[idx(e)] = hi;
    } else {
      fail(line.number, "unknown record `" + tag + "`");
    }
  }
  return build_instance(Graph(s.n, std::move(s.edges)), DepDigraph(s.m, std::move(arcs)),
                        std::move(b), std::move(s.weights), std::move(name));
}

std::string render_instance(const Instance& inst) {
  std::string out = "p gdcst " + std::to_string(inst.vertex_count()) + " " +
                    std::to_string(inst.edge_count()) + "\n";
  out += edge_lines(inst.graph(), inst.weights());
  for (const Arc& a : inst.deps().arcs()) {
    out += "d " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1) + "\n";
  }
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const int size = static_cast<int>(inst.dep(e).size());
    if (inst.lower(e) != 0 || inst.upper(e) != size) {
      out += "b " + std::to_string(e + 1) + " " + std::to_string(inst.lower(e)) + " " +
             std::to_string(inst.upper(e)) + "\n";
    }
  }
  return out;
}

std::string render_dot(const Instance& inst, bool with_deps) {
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    out += "  " + std::to_string(v + 1) + ";\n";
  }
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const Edge& ed = inst.graph().edge(e);
    std::string label = "e" + std::to_string(e + 1);
    if (inst.is_weighted()) label += " w=" + std::to_string(inst.weight(e));
    out += "  " + std::to_string(ed.u + 1) + " -- " + std::to_string(ed.v + 1) +
           " [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  if (!with_deps) return out;
  out += "digraph D {\n";
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    out += "  e" + std::to_string(e + 1) + " [label=\"e" + std::to_string(e + 1) + " [" +
           std::to_string(inst.lower(e)) + "," + std::to_string(inst.upper(e)) + "]\"];\n";
  }
  for (const Arc& a : inst.deps().arcs()) {
    out += "  e" + std::to_string(a.tail + 1) + " -> e" + std::to_string(a.head + 1) + ";\n";
  }
  out += "}\n";
  return out;
}

SourceProblem parse_source_problem(std::string_view text) {
  EdgeSection s = read_edges(text);
  const std::optional<SourceKind> kind = parse_source_kind(s.kind);
  if (!kind) fail(1, "unknown source problem `" + s.kind + "`");
  SourceProblem p;
  p.kind = *kind;
  p.graph = Graph(s.n, std::move(s.edges));
  p.weights = std::move(s.weights);
  const std::vector<int> deg = p.graph.degrees();
  switch (p.kind) {
    case SourceKind::kMdst: p.upper.assign(idx(s.n), s.n - 1); break;
    case SourceKind::kMinDegree:
      p.lower.assign(idx(s.n), 1);
      p.upper = deg;
      break;
    case SourceKind::kFmdst:
      p.lower.assign(idx(s.n), 0);
      p.in_c.assign(idx(s.n), false);
      break;
    default: break;
  }
  const bool pairs = p.kind == SourceKind::kCcst || p.kind == SourceKind::kFcst;
  std::vector<bool> given(idx(s.n), false);
  for (const Line& line : s.rest) {
    const std::string& tag = line.tokens[0];
    if (tag == "x" && pairs) {
      expect_arity(line, 3, 3);
      const int a = to_id(line, 1, s.m, "edge");
      const int b = to_id(line, 2, s.m, "edge");
      if (a == b) fail(line.number, "pair joins an edge to itself");
      p.pairs.emplace_back(a, b);
    } else if (tag == "k" && !pairs) {
      const int v = to_id(line, 1, s.n, "vertex");
      if (given[idx(v)]) fail(line.number, "second `k` line for vertex " + line.tokens[1]);
      given[idx(v)] = true;
      if (p.kind == SourceKind::kMinDegree) {
        expect_arity(line, 4, 4);
        p.lower[idx(v)] = to_count(line, 2);
        p.upper[idx(v)] = to_count(line, 3);
      } else if (p.kind == SourceKind::kMdst) {
        expect_arity(line, 3, 3);
        p.upper[idx(v)] = to_count(line, 2);
      } else {
        expect_arity(line, 3, 3);
        p.in_c[idx(v)] = true;
        p.lower[idx(v)] = to_count(line, 2);
      }
    } else {
      fail(line.number, "record `" + tag + "` not valid for " + s.kind);
    }
  }
  check_source_problem(p);
  return p;
}

std::string render_source_problem(const SourceProblem& p) {
  check_source_problem(p);
  std::string out = "p " + std::string(source_kind_token(p.kind)) + " " +
                    std::to_string(p.graph.vertex_count()) + " " +
                    std::to_string(p.graph.edge_count()) + "\n";
  out += edge_lines(p.graph, p.weights);
  for (const auto& [a, b] : p.pairs) {
    out += "x " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  }
  for (VertexId v = 0; v < p.graph.vertex_count(); ++v) {
    const std::string id = std::to_string(v + 1);
    switch (p.kind) {
      case SourceKind::kMdst: out += "k " + id + " " + std::to_string(p.upper[idx(v)]) + "\n"; break;
      case SourceKind::kMinDegree:
        out += "k " + id + " " + std::to_string(p.lower[idx(v)]) + " " +
               std::to_string(p.upper[idx(v)]) + "\n";
        break;
      case SourceKind::kFmdst:
        if (p.in_c[idx(v)]) out += "k " + id + " " + std::to_string(p.lower[idx(v)]) + "\n";
        break;
      default: break;
    }
  }
  return out;
}

}  // namespace gdcst
