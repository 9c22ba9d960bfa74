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

#ifndef GDCST_ERROR_HPP_
#define GDCST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdcst {

enum class ErrorCode {
  kIndexOutOfRange,
  kLoopEdge,
  kDuplicateEdge,
  kSelfArc,
  kDuplicateArc,
  kInfeasibleBounds,
  kSizeMismatch,
  kOverflow,
  kGroundSetMismatch,
  kNonConstantBounds,
  kInfeasibleDegreeCap,
  kInvalidArgument,
  kInvalidWitness,
  kNotSpanningTree,
  kNot322,
  kInvalidCnf,
  kUnreachableTarget,
  kMalformedHeader,
  kLiteralOutOfRange,
  kUnterminatedClause,
  kCapExceeded,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// All recoverable failures in the library surface as this exception; the
// code is stable and is what tests and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gdcst

#endif  // GDCST_ERROR_HPP_
