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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "leancode/java_lex.hpp"

namespace leancode {

// Declaration order is the row order of the per-category statistics report.
enum class Category {
  kAnnotation,
  kArithmetic,
  kVariableDeclaration,
  kFunctionInvocation,
  kReturn,
  kSwitch,
  kBreak,
  kSetter,
  kSynchronized,
  kTry,
  kCatch,
  kMethodSignature,
  kFinally,
  kGetter,
  kThrow,
  kCase,
  kWhile,
  kContinue,
  kIfCondition,
  kFor,
  kLogging,
  kOther,
};

inline constexpr std::size_t kNumScoredCategories = 21;
inline constexpr std::size_t kNumCategories = 22;

/// The 21 aggregate-bearing categories in report order (Other excluded).
const std::array<Category, kNumScoredCategories>& scored_categories();

inline constexpr std::size_t category_index(Category c) {
  return static_cast<std::size_t>(c);
}

/// Wire name, e.g. "MethodSignature".
std::string_view category_name(Category c);
/// Human-readable name, e.g. "Method Signature".
std::string_view category_display_name(Category c);
std::optional<Category> parse_category(std::string_view name);

/// Half-open token index range [begin, end).
struct StatementRange {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool operator==(const StatementRange&) const = default;
};

struct Segmentation {
  std::vector<StatementRange> ranges;
  std::optional<std::size_t> signature;  // index into ranges
  bool degraded = false;  // braces/parens unbalanced; split by source line
};

struct Statement {
  StatementRange range;
  Category category = Category::kOther;

  bool operator==(const Statement&) const = default;
};

struct StatementSet {
  std::vector<Statement> statements;
  bool degraded = false;

  /// Category of the statement containing each token, indexed by token.
  std::vector<Category> token_categories(std::size_t n_tokens) const;
};

/// Splits a token stream into disjoint, sorted statement ranges that cover
/// every token. Boundaries fall at top-level `;`, `{`, `}`, after case
/// labels, and around annotations at statement start. Braces that open a
/// block attach to the header they follow; the method body `{` and every
/// closing `}` stand alone. Braces inside parentheses, array initialisers and
/// lambda bodies do not split.
Segmentation split(std::span<const CodeToken> tokens);

/// First-match precedence ladder over the statement's tokens. `is_signature`
/// comes from split().
Category categorize(std::span<const CodeToken> tokens, StatementRange range,
                    bool is_signature);

/// split() followed by categorize() on every range.
StatementSet classify(std::span<const CodeToken> tokens);
inline StatementSet classify(const Snippet& snippet) {
  return classify(std::span<const CodeToken>(snippet.tokens));
}

}  // namespace leancode
