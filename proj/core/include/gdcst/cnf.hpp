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

#ifndef GDCST_CNF_HPP_
#define GDCST_CNF_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace gdcst {

// Literals are DIMACS style: +x / -x for variable x in 1..variable_count.
struct Cnf {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

// Throws kInvalidCnf on an empty clause or a variable repeated inside a
// clause, kLiteralOutOfRange on 0 or |lit| > variable_count.
void check_cnf(const Cnf& cnf);

// Every clause has 2 or 3 literals; every variable occurs at most twice
// positively and at most twice negatively.
bool validate_322(const Cnf& cnf);

// `p cnf V C` header, `c` comments, clauses terminated by 0 (a clause may
// span lines). Errors: kMalformedHeader, kLiteralOutOfRange,
// kUnterminatedClause, kInvalidCnf.
Cnf parse_dimacs_cnf(std::string_view text);
std::string render_dimacs_cnf(const Cnf& cnf);

}  // namespace gdcst

#endif  // GDCST_CNF_HPP_
