// Copyright 2026 The leancode Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leancode {

enum class ErrorCode {
  kUnterminatedLiteral,
  kEmptySnippet,
  kMixedKind,
  kNegativeScore,
  kMalformedRecord,
  kEmptyTable,
  kKindMismatch,
  kUnknownMethod,
  kBudgetTooSmall,
  kInvalidCounts,
  kInvalidRatio,
  kMismatchedIds,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures surface as this exception; `code()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the lexer; carries the 1-based position of the opening quote or
/// comment marker.
class LexError : public Error {
 public:
  LexError(const std::string& message, int line, int col)
      : Error(ErrorCode::kUnterminatedLiteral,
              message + " at " + std::to_string(line) + ":" +
                  std::to_string(col)),
        line_(line),
        col_(col) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace leancode
