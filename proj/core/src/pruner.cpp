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

#include "leancode/pruner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numeric>

#include "leancode/baselines.hpp"
#include "leancode/error.hpp"
#include "leancode/metrics.hpp"
#include "leancode/parallel.hpp"

namespace leancode {

std::string_view prune_method_name(PruneMethod method) {
  switch (method) {
    case PruneMethod::kLeanCode: return "leancode";
    case PruneMethod::kDietCode: return "dietcode";
    case PruneMethod::kSlimCode: return "slimcode";
  }
  return "leancode";
}

PruneMethod parse_prune_method(std::string_view name) {
  std::string lowered(name);
  for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lowered == "leancode") return PruneMethod::kLeanCode;
  if (lowered == "dietcode") return PruneMethod::kDietCode;
  if (lowered == "slimcode") return PruneMethod::kSlimCode;
  throw Error(ErrorCode::kUnknownMethod, "unknown method '" + std::string(name) + "'");
}

std::size_t removal_budget(double ratio, std::size_t n) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidRatio, "ratio must lie in [0, 1], got " + std::to_string(ratio));
  }
  const auto x = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 1e-9));
  return std::min(x, n);
}

std::vector<ScoredToken> score_tokens(const Snippet& snippet,
                                      const StatementSet& statements,
                                      const ScoreTable& table) {
  const std::vector<Category> cats = statements.token_categories(snippet.size());
  std::vector<ScoredToken> out;
  out.reserve(snippet.size());
  for (std::size_t i = 0; i < snippet.size(); ++i) {
    const CodeToken& tok = snippet.tokens[i];
    const LookupResult hit = table.lookup(tok.text, cats[i]);
    out.push_back({tok, cats[i], hit.score, hit.level});
  }
  return out;
}

std::vector<int> select_lowest(std::span<const double> scores, std::size_t budget,
                               std::span<const bool> protect) {
  const std::size_t n = scores.size();
  budget = std::min(budget, n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const bool guarded = !protect.empty();
  // Strict total order: (protected, score ascending, index descending).
  auto before = [&](int a, int b) {
    if (guarded && protect[a] != protect[b]) return !protect[a];
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return a > b;
  };
  if (budget < n) {
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(budget),
                     order.end(), before);
  }
  order.resize(budget);
  std::sort(order.begin(), order.end());
  return order;
}

PruneResult make_prune_result(std::span<const CodeToken> tokens,
                              std::span<const Category> token_categories,
                              std::vector<int> removed_indices) {
  PruneResult r;
  r.n_tokens = tokens.size();
  std::vector<bool> removed(tokens.size(), false);
  for (int i : removed_indices) {
    removed[static_cast<std::size_t>(i)] = true;
    ++r.per_category_removed[category_index(token_categories[static_cast<std::size_t>(i)])];
  }
  r.kept.reserve(tokens.size() - removed_indices.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!removed[i]) r.kept.push_back(tokens[i]);
  }
  r.removed_indices = std::move(removed_indices);
  r.achieved_ratio = tokens.empty()
                         ? 0.0
                         : simplified_ratio(static_cast<long long>(tokens.size()),
                                            static_cast<long long>(r.kept.size()));
  return r;
}

PruneResult prune_leancode(std::span<const ScoredToken> scored, double ratio,
                           bool protect_signature) {
  const std::size_t n = scored.size();
  const std::size_t budget = removal_budget(ratio, n);
  std::vector<double> scores(n);
  std::vector<CodeToken> tokens(n);
  std::vector<Category> cats(n);
  std::array<int, kNumFallbackLevels> fallback{};
  for (std::size_t i = 0; i < n; ++i) {
    scores[i] = scored[i].score;
    tokens[i] = scored[i].token;
    cats[i] = scored[i].category;
    ++fallback[static_cast<std::size_t>(scored[i].fallback_level)];
  }
  std::vector<int> removed;
  if (protect_signature) {
    // std::vector<bool> has no contiguous storage to span over.
    std::unique_ptr<bool[]> guard(new bool[n]);
    for (std::size_t i = 0; i < n; ++i) guard[i] = cats[i] == Category::kMethodSignature;
    removed = select_lowest(scores, budget, std::span<const bool>(guard.get(), n));
  } else {
    removed = select_lowest(scores, budget);
  }
  PruneResult r = make_prune_result(tokens, cats, std::move(removed));
  r.fallback_histogram = fallback;
  return r;
}

PruneOutcome prune(const Snippet& snippet, const StatementSet& statements,
                   const ScoreTable& table, const PruneConfig& config) {
  if (config.score_kind && table.kind() && *table.kind() != *config.score_kind) {
    throw Error(ErrorCode::kKindMismatch,
                "table kind " + std::string(score_kind_name(*table.kind())) +
                    " does not match requested " +
                    std::string(score_kind_name(*config.score_kind)));
  }
  PruneOutcome out;
  switch (config.method) {
    case PruneMethod::kLeanCode:
      out.result = prune_leancode(score_tokens(snippet, statements, table), config.ratio,
                                  config.protect_signature);
      break;
    case PruneMethod::kDietCode:
      out.result = prune_dietcode(snippet, statements, table, config.ratio);
      break;
    case PruneMethod::kSlimCode:
      out.result = prune_slimcode(snippet, statements, config.ratio);
      break;
  }
  out.result.degraded = statements.degraded;
  if (!out.result.kept.empty()) out.simplified_text = detokenize(out.result.kept);
  return out;
}

std::vector<PruneOutcome> prune_batch(std::span<const Snippet> snippets,
                                      const ScoreTable& table, const PruneConfig& config,
                                      unsigned jobs) {
  std::vector<PruneOutcome> out(snippets.size());
  parallel_for(snippets.size(), jobs, [&](std::size_t i) {
    out[i] = prune(snippets[i], classify(snippets[i]), table, config);
  });
  return out;
}

}  // namespace leancode
