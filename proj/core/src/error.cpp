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

#include "leancode/error.hpp"

namespace leancode {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnterminatedLiteral: return "UnterminatedLiteral";
    case ErrorCode::kEmptySnippet: return "EmptySnippet";
    case ErrorCode::kMixedKind: return "MixedKind";
    case ErrorCode::kNegativeScore: return "NegativeScore";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kUnknownMethod: return "UnknownMethod";
    case ErrorCode::kBudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kInvalidRatio: return "InvalidRatio";
    case ErrorCode::kMismatchedIds: return "MismatchedIds";
    case ErrorCode::kIo: return "IO";
  }
  return "Unknown";
}

}  // namespace leancode
