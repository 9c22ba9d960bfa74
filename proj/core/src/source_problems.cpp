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

#include "gdcst/source_problems.hpp"

#include <string>

#include "gdcst/error.hpp"

namespace gdcst {

std::string_view source_kind_token(SourceKind kind) {
  switch (kind) {
    case SourceKind::kCcst: return "ccst";
    case SourceKind::kFcst: return "fcst";
    case SourceKind::kMdst: return "mdst";
    case SourceKind::kMinDegree: return "mindeg";
    case SourceKind::kFmdst: return "fmdst";
  }
  return "unknown";
}

std::optional<SourceKind> parse_source_kind(std::string_view token) {
  for (SourceKind k : {SourceKind::kCcst, SourceKind::kFcst, SourceKind::kMdst,
                       SourceKind::kMinDegree, SourceKind::kFmdst}) {
    if (source_kind_token(k) == token) return k;
  }
  return std::nullopt;
}

namespace {

void check_length(size_t got, int want, const char* what) {
  if (got != static_cast<size_t>(want)) {
    throw Error(ErrorCode::kSizeMismatch,
                std::string(what) + " has " + std::to_string(got) +
                    " entries, expected " + std::to_string(want));
  }
}

}  // namespace

void check_source_problem(const SourceProblem& p) {
  const int n = p.graph.vertex_count();
  const int m = p.graph.edge_count();
  if (p.weights) check_length(p.weights->size(), m, "weights");
  switch (p.kind) {
    case SourceKind::kCcst:
    case SourceKind::kFcst:
      for (const auto& [a, b] : p.pairs) {
        if (a < 0 || b < 0 || a >= m || b >= m) {
          throw Error(ErrorCode::kIndexOutOfRange,
                      "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") with " + std::to_string(m) + " edges");
        }
        if (a == b) {
          throw Error(ErrorCode::kInvalidArgument,
                      "pair joins edge " + std::to_string(a) + " to itself");
        }
      }
      break;
    case SourceKind::kMdst:
      check_length(p.upper.size(), n, "degree caps");
      break;
    case SourceKind::kMinDegree:
      check_length(p.lower.size(), n, "lower degree bounds");
      check_length(p.upper.size(), n, "upper degree bounds");
      break;
    case SourceKind::kFmdst:
      check_length(p.lower.size(), n, "lower degree bounds");
      check_length(p.in_c.size(), n, "nonleaf set");
      break;
  }
}

}  // namespace gdcst
