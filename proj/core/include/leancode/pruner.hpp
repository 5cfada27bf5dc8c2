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
#include <string>
#include <string_view>
#include <vector>

#include "leancode/java_lex.hpp"
#include "leancode/score_table.hpp"
#include "leancode/statements.hpp"

namespace leancode {

enum class PruneMethod { kLeanCode, kDietCode, kSlimCode };

/// "leancode", "dietcode" or "slimcode".
std::string_view prune_method_name(PruneMethod method);
/// Case-insensitive; throws Error(kUnknownMethod).
PruneMethod parse_prune_method(std::string_view name);

struct PruneConfig {
  double ratio = 0.0;  // fraction of tokens to remove, in [0, 1]
  PruneMethod method = PruneMethod::kLeanCode;
  /// When set, the table's kind must match.
  std::optional<ScoreKind> score_kind;
  /// Non-default: signature tokens are removed only after every other token.
  bool protect_signature = false;
};

struct ScoredToken {
  CodeToken token;
  Category category = Category::kOther;
  double score = 0.0;
  FallbackLevel fallback_level = FallbackLevel::kGlobalMean;
};

struct PruneResult {
  std::vector<CodeToken> kept;     // source order
  std::vector<int> removed_indices;  // ascending
  std::size_t n_tokens = 0;
  double achieved_ratio = 0.0;  // percent
  std::array<int, kNumCategories> per_category_removed{};
  std::array<int, kNumFallbackLevels> fallback_histogram{};  // over all tokens
  /// DietCode only: ratio reached by statement selection before the top-up.
  std::optional<double> pre_topup_ratio;
  bool degraded = false;  // statement split fell back to lines
};

struct PruneOutcome {
  PruneResult result;
  std::string simplified_text;  // empty when every token was removed
};

/// Number of tokens to remove, floor(ratio * n). A 1e-9 slack absorbs the
/// binary representation error of decimal ratios (0.29 * 100 is
/// 28.999999999999996 in doubles). Throws Error(kInvalidRatio) outside [0, 1].
std::size_t removal_budget(double ratio, std::size_t n);

/// Looks up every token under its statement's category. Propagates EmptyTable.
std::vector<ScoredToken> score_tokens(const Snippet& snippet,
                                      const StatementSet& statements,
                                      const ScoreTable& table);

/// Indices of the `budget` smallest scores, ties removing the higher index
/// first, returned ascending. Tokens flagged in `protect` rank after all
/// unprotected ones.
std::vector<int> select_lowest(std::span<const double> scores, std::size_t budget,
                               std::span<const bool> protect = {});

/// Removes floor(ratio * n) lowest-scoring tokens (higher index first on
/// ties); the optimum of min sum(w_i x_i) subject to sum(x_i) = budget.
PruneResult prune_leancode(std::span<const ScoredToken> scored, double ratio,
                           bool protect_signature = false);

/// Dispatches on config.method and detokenizes the kept tokens.
PruneOutcome prune(const Snippet& snippet, const StatementSet& statements,
                   const ScoreTable& table, const PruneConfig& config);

/// Classifies and prunes every snippet; output order matches input order.
std::vector<PruneOutcome> prune_batch(std::span<const Snippet> snippets,
                                      const ScoreTable& table,
                                      const PruneConfig& config,
                                      unsigned jobs = 1);

/// Fills the derived fields of a result from the removed set.
PruneResult make_prune_result(std::span<const CodeToken> tokens,
                              std::span<const Category> token_categories,
                              std::vector<int> removed_indices);

}  // namespace leancode
