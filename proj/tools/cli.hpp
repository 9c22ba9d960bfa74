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


// Command-line driver. Exit codes: 0 feasible or valid, 2 infeasible or
// invalid, 1 library error, 64 usage error, 74 I/O error.

#ifndef GDCST_TOOLS_CLI_HPP_
#define GDCST_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gdcst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace gdcst::cli

#endif  // GDCST_TOOLS_CLI_HPP_
