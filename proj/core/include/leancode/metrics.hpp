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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leancode/score_table.hpp"
#include "leancode/statements.hpp"

namespace leancode {

/// Percentage of code tokens removed: 100 * (code - scode) / code.
/// Throws Error(kInvalidCounts) unless code >= 1 and 0 <= scode <= code.
double simplified_ratio(long long code_tokens, long long scode_tokens);

/// Jaccard index |a & b| / |a | b| of two ascending index lists; 1 when both
/// are empty.
double jaccard(std::span<const int> a, std::span<const int> b);

/// One pruned snippet as carried by the pruning JSONL.
struct PruneRecord {
  std::string id;
  std::string method;
  double ratio = 0.0;
  std::size_t n_tokens = 0;
  std::vector<int> removed_indices;
  double achieved_ratio = 0.0;
  std::array<int, kNumCategories> per_category_removed{};
  std::array<int, kNumFallbackLevels> fallback_histogram{};

  /// Complement of removed_indices in [0, n_tokens).
  std::vector<int> kept_indices() const;
};

struct ComparisonRow {
  std::string method;
  double ratio = 0.0;
  std::size_t snippets = 0;
  double mean_achieved = 0.0;
  /// Mean per-snippet kept-set Jaccard against leancode at the same ratio;
  /// empty when no leancode results exist for that ratio.
  std::optional<double> jaccard_vs_leancode;
  std::int64_t removed_total = 0;
  std::array<std::int64_t, kNumCategories> removed_by_category{};
  std::array<std::int64_t, kNumFallbackLevels> fallback{};
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // sorted by (method, ratio)

  /// Columns: method, ratio, mean_achieved, jaccard_vs_leancode, category,
  /// removed_count; one line per (row, category).
  std::string to_csv() const;
  std::string to_markdown() const;
};

/// Groups records by (method, ratio). Every group at one ratio must carry
/// the same snippet ids, each once; otherwise throws Error(kMismatchedIds).
ComparisonReport compare(std::span<const PruneRecord> records);

}  // namespace leancode
