// Copyright 2026 The wafmatrix Authors
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

#ifndef WAFMATRIX_ERROR_HPP_
#define WAFMATRIX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace waf {

enum class ErrorCode {
  kInstanceMismatch,
  kMalformedLiteral,
  kOutOfRange,
  kUnknownSemiring,
  kForeignArgument,
  kDuplicateArgument,
  kNotAPermutation,
  kIndexOutOfRange,
  kNotConflictFree,
  kPreconditionViolation,
  kOracleLimit,
  kInternalInconsistency,
  kSelectorContract,
  kSyntax,
  kDuplicateAttack,
  kUndeclaredArgument,
  kTopWeightAttack,
  kMissingWeight,
  kUnexpectedWeight,
  kInvalidRange,
  kIo,
};

/// Stable upper-case identifier for an error code, e.g. "TOP-WEIGHT-ATTACK".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax and semantic errors raised while reading a .wapx document.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace waf

#endif  // WAFMATRIX_ERROR_HPP_
