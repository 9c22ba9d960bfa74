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

#include "gdcst/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gdcst/error.hpp"

namespace gdcst {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

bool parse_int(const std::string& token, long long* out) {
  if (token.empty()) return false;
  char* end = nullptr;
  *out = std::strtoll(token.c_str(), &end, 10);
  return end == token.c_str() + token.size();
}

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

void check_cnf(const Cnf& cnf) {
  if (cnf.variable_count < 0) {
    throw Error(ErrorCode::kInvalidCnf, "negative variable count");
  }
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    const auto& clause = cnf.clauses[c];
    if (clause.empty()) {
      throw Error(ErrorCode::kInvalidCnf, "clause " + std::to_string(c + 1) + " is empty");
    }
    std::vector<bool> seen(idx(cnf.variable_count + 1), false);
    for (int lit : clause) {
      const int var = lit < 0 ? -lit : lit;
      if (lit == 0 || var > cnf.variable_count) {
        throw Error(ErrorCode::kLiteralOutOfRange,
                    "literal " + std::to_string(lit) + " in clause " +
                        std::to_string(c + 1));
      }
      if (seen[idx(var)]) {
        throw Error(ErrorCode::kInvalidCnf,
                    "variable " + std::to_string(var) + " repeated in clause " +
                        std::to_string(c + 1));
      }
      seen[idx(var)] = true;
    }
  }
}

bool validate_322(const Cnf& cnf) {
  std::vector<int> pos(idx(cnf.variable_count + 1), 0);
  std::vector<int> neg(idx(cnf.variable_count + 1), 0);
  for (const auto& clause : cnf.clauses) {
    if (clause.size() < 2 || clause.size() > 3) return false;
    for (int lit : clause) {
      if (lit > 0 && ++pos[idx(lit)] > 2) return false;
      if (lit < 0 && ++neg[idx(-lit)] > 2) return false;
    }
  }
  return true;
}

Cnf parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long declared = 0;
  Cnf cnf;
  std::vector<int> pending;
  int pending_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string format;
      std::string v;
      std::string c;
      std::string extra;
      long long vars = 0;
      if (have_header || !(tokens >> format >> v >> c) || (tokens >> extra) ||
          format != "cnf" || !parse_int(v, &vars) || !parse_int(c, &declared) ||
          vars < 0 || declared < 0 || vars > 1000000) {
        throw Error(ErrorCode::kMalformedHeader, at_line(line_no) + line);
      }
      cnf.variable_count = static_cast<int>(vars);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw Error(ErrorCode::kMalformedHeader,
                  at_line(line_no) + "clause before `p cnf` header");
    }
    std::string token = first;
    do {
      long long lit = 0;
      if (!parse_int(token, &lit)) {
        throw Error(ErrorCode::kParse, at_line(line_no) + "bad literal `" + token + "`");
      }
      if (lit == 0) {
        if (pending.empty()) {
          throw Error(ErrorCode::kInvalidCnf, at_line(line_no) + "empty clause");
        }
        cnf.clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (lit < -cnf.variable_count || lit > cnf.variable_count) {
        throw Error(ErrorCode::kLiteralOutOfRange,
                    at_line(line_no) + "literal " + token + " with " +
                        std::to_string(cnf.variable_count) + " variables");
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(static_cast<int>(lit));
    } while (tokens >> token);
  }
  if (!have_header) throw Error(ErrorCode::kMalformedHeader, "missing `p cnf` header");
  if (!pending.empty()) {
    throw Error(ErrorCode::kUnterminatedClause,
                at_line(pending_line) + "clause not terminated by 0");
  }
  if (static_cast<long long>(cnf.clauses.size()) != declared) {
    throw Error(ErrorCode::kMalformedHeader,
                "header declares " + std::to_string(declared) + " clauses, found " +
                    std::to_string(cnf.clauses.size()));
  }
  check_cnf(cnf);
  return cnf;
}

std::string render_dimacs_cnf(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.variable_count) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

}  // namespace gdcst
