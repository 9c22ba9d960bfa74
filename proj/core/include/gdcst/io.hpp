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

// Text formats. Ids are 1-based on the wire and 0-based in memory.
//
// Instance file:
//   p gdcst <n> <m>
//   e <u> <v> [w]        m lines, in edge id order
//   d <tail> <head>      arcs between edge ids
//   b <edge> <ell> <u>   bounds; default is ℓ = 0, u = |dep|
//   # comment
//
// Source problem file:
//   p <ccst|fcst|mdst|mindeg|fmdst> <n> <m>
//   e <u> <v> [w]
//   x <edge> <edge>      conflict or forcing pair
//   k <v> <a> [<b>]      mdst: cap a; mindeg: bounds a..b; fmdst: v in C, lower a

#ifndef GDCST_IO_HPP_
#define GDCST_IO_HPP_

#include <string>
#include <string_view>

#include "gdcst/graph.hpp"
#include "gdcst/source_problems.hpp"

namespace gdcst {

// Errors are kParse with a "line N:" prefix, or the build_instance error.
Instance parse_instance(std::string_view text, std::string name = {});

// Canonical form: header, edges, arcs sorted, then bounds that differ from
// the default. render(parse(render(x))) == render(x).
std::string render_instance(const Instance& instance);

// `graph G { ... }` and, with deps, a second `digraph D { ... }` whose
// nodes are edge ids.
std::string render_dot(const Instance& instance, bool with_deps);

// Missing `k` lines default to: mdst cap n-1; mindeg bounds 1..deg(v);
// fmdst v outside C.
SourceProblem parse_source_problem(std::string_view text);
std::string render_source_problem(const SourceProblem& problem);

}  // namespace gdcst

#endif  // GDCST_IO_HPP_
