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

#include "leancode/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "leancode/error.hpp"
#include "leancode/metrics.hpp"

namespace leancode {

namespace {

bool is_control_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 18> kControl = {
      "if",    "else",  "for",     "while",   "do",           "switch",
      "case",  "default", "break", "continue", "return",      "throw",
      "try",   "catch", "finally", "synchronized", "assert",  "throws"};
  return std::find(kControl.begin(), kControl.end(), w) != kControl.end();
}

bool is_literal(TokenKind k) {
  return k == TokenKind::kStringLiteral || k == TokenKind::kCharLiteral ||
         k == TokenKind::kNumberLiteral || k == TokenKind::kBoolNullLiteral;
}

// Ranks a token list by `keys` ascending (ties: higher index first) and
// returns the indices in that order.
std::vector<int> removal_order(std::span<const double> keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return a > b;
  });
  return order;
}

}  // namespace

const PriorityLadder& PriorityLadder::standard() {
  static const PriorityLadder ladder({
      {1, "method signature",
       [](const TokenContext& c) { return c.category == Category::kMethodSignature; }},
      {8, "symbols", [](const TokenContext& c) { return c.token.is_symbol(); }},
      {7, "annotations",
       [](const TokenContext& c) {
         return c.category == Category::kAnnotation ||
                c.token.kind == TokenKind::kAnnotationAt;
       }},
      {2, "invoked method names",
       [](const TokenContext& c) {
         return c.token.kind == TokenKind::kIdentifier && c.next != nullptr &&
                c.next->is("(");
       }},
      {3, "identifiers",
       [](const TokenContext& c) { return c.token.kind == TokenKind::kIdentifier; }},
      {4, "literals", [](const TokenContext& c) { return is_literal(c.token.kind); }},
      {5, "control keywords",
       [](const TokenContext& c) {
         return c.token.kind == TokenKind::kKeyword && is_control_keyword(c.token.text);
       }},
      {6, "keywords",
       [](const TokenContext& c) { return c.token.kind == TokenKind::kKeyword; }},
  });
  return ladder;
}

int PriorityLadder::level(const TokenContext& ctx) const {
  for (const Rule& rule : rules_) {
    if (rule.matches(ctx)) return rule.level;
  }
  throw std::logic_error("priority ladder matched no rule for token '" + ctx.token.text + "'");
}

std::vector<int> priority_levels(std::span<const CodeToken> tokens,
                                 std::span<const Category> token_categories,
                                 const PriorityLadder& ladder) {
  std::vector<int> levels(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const CodeToken* next = i + 1 < tokens.size() ? &tokens[i + 1] : nullptr;
    levels[i] = ladder.level({tokens[i], token_categories[i], next});
  }
  return levels;
}

PruneResult prune_slimcode(const Snippet& snippet, const StatementSet& statements,
                           double ratio, const PriorityLadder& ladder) {
  const std::size_t budget = removal_budget(ratio, snippet.size());
  const std::vector<Category> cats = statements.token_categories(snippet.size());
  const std::vector<int> levels = priority_levels(snippet.tokens, cats, ladder);
  // Higher level means lower keep-priority, so it sorts first.
  std::vector<double> keys(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) keys[i] = -static_cast<double>(levels[i]);
  return make_prune_result(snippet.tokens, cats, select_lowest(keys, budget));
}

std::vector<std::size_t> select_statements_knapsack(std::span<const StatementWeight> weights,
                                                    int budget) {
  int forced_len = 0;
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].forced) {
      forced_len += weights[i].length;
    } else {
      items.push_back(i);
    }
  }
  if (budget < 0 || forced_len > budget) {
    throw Error(ErrorCode::kBudgetTooSmall,
                "forced statements need " + std::to_string(forced_len) +
                    " tokens, budget is " + std::to_string(budget));
  }
  const auto cap = static_cast<std::size_t>(budget - forced_len);
  const std::size_t k = items.size();
  const std::size_t width = cap + 1;
  // best[i * width + c]: optimum over items[i..k) with capacity c.
  std::vector<double> best((k + 1) * width, 0.0);
  for (std::size_t i = k; i-- > 0;) {
    const StatementWeight& w = weights[items[i]];
    const auto len = static_cast<std::size_t>(w.length);
    const double* next = &best[(i + 1) * width];
    double* row = &best[i * width];
    for (std::size_t c = 0; c <= cap; ++c) {
      row[c] = next[c];
      if (len <= c) row[c] = std::max(row[c], w.weight + next[c - len]);
    }
  }
  // Greedy reconstruction of the lexicographically smallest optimal list.
  // Taking item i puts index i next in the list; skipping it puts a larger
  // index next unless nothing at all follows.
  // forced_from[j]: forced statements with index >= j.
  std::vector<std::size_t> forced_from(weights.size() + 1, 0);
  for (std::size_t j = weights.size(); j-- > 0;) {
    forced_from[j] = forced_from[j + 1] + (weights[j].forced ? 1 : 0);
  }
  std::vector<bool> take(weights.size(), false);
  for (std::size_t i = 0; i < weights.size(); ++i) take[i] = weights[i].forced;
  std::size_t c = cap;
  for (std::size_t i = 0; i < k; ++i) {
    const StatementWeight& w = weights[items[i]];
    const auto len = static_cast<std::size_t>(w.length);
    if (len > c) continue;
    const double inc = w.weight + best[(i + 1) * width + c - len];
    const double exc = best[(i + 1) * width + c];
    const bool exclude_list_ends = exc == 0.0 && forced_from[items[i] + 1] == 0;
    if (inc > exc || (inc == exc && !exclude_list_ends)) {
      take[items[i]] = true;
      c -= len;
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (take[i]) kept.push_back(i);
  }
  return kept;
}

std::vector<StatementWeight> statement_weights(const StatementSet& statements,
                                               std::span<const double> token_scores) {
  std::vector<StatementWeight> out;
  out.reserve(statements.statements.size());
  for (const Statement& st : statements.statements) {
    StatementWeight w;
    w.range = st.range;
    w.length = st.range.size();
    w.forced = st.category == Category::kMethodSignature;
    for (int i = st.range.begin; i < st.range.end; ++i) {
      w.weight += token_scores[static_cast<std::size_t>(i)];
    }
    out.push_back(w);
  }
  return out;
}

PruneResult prune_dietcode(const Snippet& snippet, const StatementSet& statements,
                           const ScoreTable& table, double ratio) {
  const std::size_t n = snippet.size();
  const std::size_t target = n - removal_budget(ratio, n);
  const auto capacity = static_cast<int>(
      std::min<double>(static_cast<double>(n),
                       std::floor((1.0 - ratio) * static_cast<double>(n) + 1e-9)));
  const std::vector<Category> cats = statements.token_categories(n);

  std::vector<double> scores(n);
  std::array<int, kNumFallbackLevels> fallback{};
  for (std::size_t i = 0; i < n; ++i) {
    const LookupResult hit = table.lookup_global(snippet.tokens[i].text);
    scores[i] = hit.score;
    ++fallback[static_cast<std::size_t>(hit.level)];
  }

  std::vector<bool> keep(n, false);
  const std::vector<StatementWeight> weights = statement_weights(statements, scores);
  try {
    for (std::size_t s : select_statements_knapsack(weights, capacity)) {
      for (int i = weights[s].range.begin; i < weights[s].range.end; ++i) {
        keep[static_cast<std::size_t>(i)] = true;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetTooSmall) throw;
    // Signature alone is over budget: keep its best-scoring tokens
    // (score descending, index ascending).
    std::vector<int> sig;
    for (std::size_t i = 0; i < n; ++i) {
      if (cats[i] == Category::kMethodSignature) sig.push_back(static_cast<int>(i));
    }
    std::sort(sig.begin(), sig.end(), [&](int a, int b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return a < b;
    });
    for (std::size_t j = 0; j < sig.size() && j < static_cast<std::size_t>(capacity); ++j) {
      keep[static_cast<std::size_t>(sig[j])] = true;
    }
  }

  std::size_t kept_count = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
  const double pre_topup = n == 0 ? 0.0
                                  : simplified_ratio(static_cast<long long>(n),
                                                     static_cast<long long>(kept_count));
  if (kept_count < target) {
    // Re-add the best dropped tokens: score descending, index ascending.
    std::vector<int> dropped;
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep[i]) dropped.push_back(static_cast<int>(i));
    }
    std::sort(dropped.begin(), dropped.end(), [&](int a, int b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return a < b;
    });
    for (std::size_t j = 0; kept_count < target; ++j, ++kept_count) {
      keep[static_cast<std::size_t>(dropped[j])] = true;
    }
  } else if (kept_count > target) {
    std::vector<double> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      keys[i] = keep[i] ? scores[i] : std::numeric_limits<double>::infinity();
    }
    for (int i : removal_order(keys)) {
      if (kept_count == target) break;
      if (keep[static_cast<std::size_t>(i)]) {
        keep[static_cast<std::size_t>(i)] = false;
        --kept_count;
      }
    }
  }

  std::vector<int> removed;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) removed.push_back(static_cast<int>(i));
  }
  PruneResult r = make_prune_result(snippet.tokens, cats, std::move(removed));
  r.fallback_histogram = fallback;
  r.pre_topup_ratio = pre_topup;
  return r;
}

}  // namespace leancode
