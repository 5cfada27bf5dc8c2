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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leancode/statements.hpp"

namespace leancode {

enum class ScoreKind { kCls, kEnDe, kSelfAccum };

/// "cls", "ende" or "self" (the dump and table wire names).
std::string_view score_kind_name(ScoreKind kind);
/// Accepts the wire names and "CLS" / "EnDe" / "SelfAccum".
std::optional<ScoreKind> parse_score_kind(std::string_view name);

/// One token occurrence observed in a model attention dump.
struct AttentionRecord {
  std::string snippet_id;
  int token_index = 0;
  std::string token_text;
  Category category = Category::kOther;
  double score = 0.0;
  ScoreKind kind = ScoreKind::kCls;
};

/// Mergeable first and second moments of a score population.
struct ScoreEntry {
  std::int64_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double score) {
    ++count;
    sum += score;
    sum_sq += score * score;
  }
  void merge(const ScoreEntry& other) {
    count += other.count;
    sum += other.sum;
    sum_sq += other.sum_sq;
  }
  double mean() const { return count > 0 ? sum / static_cast<double>(count) : 0.0; }
  /// Population variance, clamped at zero.
  double variance() const;

  bool operator==(const ScoreEntry&) const = default;
};

struct CategoryAccumulator {
  ScoreEntry entry;
  double max = -std::numeric_limits<double>::infinity();
  double min = std::numeric_limits<double>::infinity();

  void add(double score) {
    entry.add(score);
    if (score > max) max = score;
    if (score < min) min = score;
  }
  void merge(const CategoryAccumulator& other);

  bool operator==(const CategoryAccumulator&) const = default;
};

/// One row of the per-category report. Global statistics use the token-wide
/// average and variance of every token occurring in the category; local
/// statistics use the same tokens restricted to this category. Both are
/// weighted by the token's occurrence count inside the category.
struct CategoryStats {
  Category category = Category::kOther;
  std::int64_t count = 0;
  double max = 0.0;
  double min = 0.0;
  double global_avg = 0.0;
  double global_var = 0.0;
  double local_avg = 0.0;
  double local_var = 0.0;
};

enum class FallbackLevel { kTokenCategory, kTokenGlobal, kCategoryMean, kGlobalMean };
inline constexpr std::size_t kNumFallbackLevels = 4;

std::string_view fallback_level_name(FallbackLevel level);

struct LookupResult {
  double score = 0.0;
  FallbackLevel level = FallbackLevel::kGlobalMean;
};

struct TableMeta {
  std::int64_t record_count = 0;
  std::string build_timestamp;
  std::string source_digest;
};

/// Token-importance table: token-global averages, category-local averages and
/// per-category extremes, accumulated in one streaming pass. Records in the
/// Other category only feed the token-global and table-wide aggregates.
///
/// A table has no kind until its first record (or an explicit kind) fixes it;
/// records or tables of another kind are rejected with MixedKind.
class ScoreTable {
 public:
  struct TokenRow {
    ScoreEntry total;
    std::vector<std::pair<Category, ScoreEntry>> by_category;  // sorted, no Other

    const ScoreEntry* find(Category c) const;
    bool operator==(const TokenRow&) const = default;
  };

  ScoreTable() = default;
  explicit ScoreTable(ScoreKind kind) : kind_(kind) {}

  std::optional<ScoreKind> kind() const { return kind_; }
  TableMeta meta() const;
  void set_build_timestamp(std::string ts) { build_timestamp_ = std::move(ts); }

  bool empty() const { return totals_.count == 0; }
  std::int64_t record_count() const { return totals_.count; }
  std::size_t token_count() const { return tokens_.size(); }

  /// Throws MixedKind, NegativeScore, or MalformedRecord (non-finite score,
  /// negative index, empty token text).
  void add(const AttentionRecord& record);
  /// Fieldwise accumulation; throws MixedKind.
  void merge(const ScoreTable& other);

  /// Category-local average, then token-global average, then the category's
  /// average, then the table-wide average. Throws EmptyTable.
  LookupResult lookup(std::string_view token, Category category) const;
  /// Token-global average, falling back to the table-wide average.
  LookupResult lookup_global(std::string_view token) const;

  const TokenRow* token(std::string_view text) const;
  /// Empty accumulator for Other.
  const CategoryAccumulator& category(Category c) const;
  const ScoreEntry& totals() const { return totals_; }
  double global_mean() const { return totals_.mean(); }

  /// Report rows in category order; categories without records are omitted.
  std::vector<CategoryStats> stats() const;

  /// Every token key, byte-wise sorted.
  std::vector<std::string_view> sorted_tokens() const;

  /// Canonical JSON: header (kind, version, meta) then byte-sorted entries
  /// with sorted keys. Writing, reading and writing again is byte-identical.
  std::string to_json() const;
  static ScoreTable from_json(std::string_view text);

  /// Equality over everything but meta.
  bool same_statistics(const ScoreTable& other) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  void check_kind(ScoreKind kind);

  std::optional<ScoreKind> kind_;
  std::unordered_map<std::string, TokenRow, StringHash, std::equal_to<>> tokens_;
  std::array<CategoryAccumulator, kNumScoredCategories> categories_{};
  ScoreEntry totals_;
  std::string build_timestamp_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;  // FNV-1a over ingested records
};

/// Streaming build over a record sequence.
ScoreTable ingest(std::span<const AttentionRecord> records,
                  std::optional<ScoreKind> kind = std::nullopt);

ScoreTable merge(const ScoreTable& a, const ScoreTable& b);

}  // namespace leancode
