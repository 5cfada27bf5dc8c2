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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "leancode/pruner.hpp"

namespace leancode {

// ---------------------------------------------------------------------------
// Rule-ladder baseline. Tokens get a keep-priority level from 1 (keep
// longest) to 8 (remove first); removal takes level 8 first and, within a
// level, the higher index first.

struct TokenContext {
  const CodeToken& token;
  Category category;
  const CodeToken* next;  // null at the end of the snippet
};

class PriorityLadder {
 public:
  struct Rule {
    int level;  // 1..8
    std::string name;
    std::function<bool(const TokenContext&)> matches;
  };

  /// Rules are tried in the given order; the first match assigns its level.
  explicit PriorityLadder(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  /// L1 signature tokens, L8 symbols outside the signature, L7 remaining
  /// annotation tokens, L2 invoked method names, L3 other identifiers,
  /// L4 literals, L5 control keywords, L6 other keywords.
  static const PriorityLadder& standard();

  /// Throws std::logic_error if no rule matches.
  int level(const TokenContext& ctx) const;
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Rule> rules_;
};

std::vector<int> priority_levels(std::span<const CodeToken> tokens,
                                 std::span<const Category> token_categories,
                                 const PriorityLadder& ladder = PriorityLadder::standard());

PruneResult prune_slimcode(const Snippet& snippet, const StatementSet& statements,
                           double ratio,
                           const PriorityLadder& ladder = PriorityLadder::standard());

// ---------------------------------------------------------------------------
// Statement-selection baseline: keep the statement subset of maximum total
// token score under a token budget, then top up with the best remaining
// tokens so the final budget is exact.

struct StatementWeight {
  StatementRange range;
  double weight = 0.0;  // sum of token scores
  int length = 0;       // token count
  bool forced = false;  // method signature: always kept, length pre-deducted
};

/// Exact 0/1 knapsack by dynamic programming over token capacity. Among
/// optimal subsets the lexicographically smallest ascending index list wins.
/// Returns ascending kept statement indices, forced ones included. Throws
/// Error(kBudgetTooSmall) when the forced statements alone exceed `budget`.
std::vector<std::size_t> select_statements_knapsack(std::span<const StatementWeight> weights,
                                                    int budget);

std::vector<StatementWeight> statement_weights(const StatementSet& statements,
                                               std::span<const double> token_scores);

/// Token scores are token-global averages from `table` (the SelfAccum kind
/// is the faithful choice). Signatures longer than the budget are cut to
/// their best-scoring tokens.
PruneResult prune_dietcode(const Snippet& snippet, const StatementSet& statements,
                           const ScoreTable& table, double ratio);

}  // namespace leancode
