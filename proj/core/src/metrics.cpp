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

#include "leancode/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "leancode/error.hpp"

namespace leancode {

namespace {

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

// Ratios from different files may be parsed from "0.3" or "30%"; group them
// on a fixed grid.
std::int64_t ratio_key(double r) { return std::llround(r * 1e9); }

}  // namespace

double simplified_ratio(long long code_tokens, long long scode_tokens) {
  if (code_tokens < 1 || scode_tokens < 0 || scode_tokens > code_tokens) {
    throw Error(ErrorCode::kInvalidCounts,
                "need code >= 1 and 0 <= scode <= code, got (" +
                    std::to_string(code_tokens) + ", " + std::to_string(scode_tokens) + ")");
  }
  return 100.0 * static_cast<double>(code_tokens - scode_tokens) /
         static_cast<double>(code_tokens);
}

double jaccard(std::span<const int> a, std::span<const int> b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t both = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++both;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t either = a.size() + b.size() - both;
  return static_cast<double>(both) / static_cast<double>(either);
}

std::vector<int> PruneRecord::kept_indices() const {
  std::vector<int> kept;
  kept.reserve(n_tokens);
  std::size_t r = 0;
  for (int i = 0; i < static_cast<int>(n_tokens); ++i) {
    if (r < removed_indices.size() && removed_indices[r] == i) {
      ++r;
    } else {
      kept.push_back(i);
    }
  }
  return kept;
}

ComparisonReport compare(std::span<const PruneRecord> records) {
  using GroupKey = std::pair<std::string, std::int64_t>;
  std::map<GroupKey, std::vector<const PruneRecord*>> groups;
  std::map<GroupKey, double> group_ratio;
  for (const PruneRecord& r : records) {
    GroupKey key{r.method, ratio_key(r.ratio)};
    groups[key].push_back(&r);
    group_ratio.emplace(key, r.ratio);
  }

  // Id sets must agree across methods at each ratio.
  std::map<std::int64_t, std::set<std::string>> ids_at_ratio;
  for (const auto& [key, members] : groups) {
    std::set<std::string> ids;
    for (const PruneRecord* r : members) {
      if (!ids.insert(r->id).second) {
        throw Error(ErrorCode::kMismatchedIds,
                    "duplicate id '" + r->id + "' for method " + key.first);
      }
    }
    auto [it, fresh] = ids_at_ratio.emplace(key.second, ids);
    if (!fresh && it->second != ids) {
      throw Error(ErrorCode::kMismatchedIds,
                  "method " + key.first + " covers different snippet ids at ratio " +
                      format_number(group_ratio[key]));
    }
  }

  ComparisonReport report;
  for (const auto& [key, members] : groups) {
    ComparisonRow row;
    row.method = key.first;
    row.ratio = group_ratio[key];
    row.snippets = members.size();
    double achieved = 0.0;
    for (const PruneRecord* r : members) {
      achieved += r->achieved_ratio;
      row.removed_total += static_cast<std::int64_t>(r->removed_indices.size());
      for (std::size_t c = 0; c < kNumCategories; ++c) {
        row.removed_by_category[c] += r->per_category_removed[c];
      }
      for (std::size_t f = 0; f < kNumFallbackLevels; ++f) {
        row.fallback[f] += r->fallback_histogram[f];
      }
    }
    row.mean_achieved = members.empty() ? 0.0 : achieved / static_cast<double>(members.size());

    auto base = groups.find({"leancode", key.second});
    if (base != groups.end()) {
      std::map<std::string, const PruneRecord*> by_id;
      for (const PruneRecord* r : base->second) by_id[r->id] = r;
      // Sum in id order so the mean does not depend on input order.
      std::vector<const PruneRecord*> sorted(members.begin(), members.end());
      std::sort(sorted.begin(), sorted.end(),
                [](const PruneRecord* a, const PruneRecord* b) { return a->id < b->id; });
      double total = 0.0;
      for (const PruneRecord* r : sorted) {
        total += jaccard(r->kept_indices(), by_id.at(r->id)->kept_indices());
      }
      row.jaccard_vs_leancode = sorted.empty() ? 1.0 : total / static_cast<double>(sorted.size());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string ComparisonReport::to_csv() const {
  std::ostringstream out;
  out << "method,ratio,mean_achieved,jaccard_vs_leancode,category,removed_count\n";
  for (const ComparisonRow& row : rows) {
    const std::string jac = row.jaccard_vs_leancode ? format_number(*row.jaccard_vs_leancode) : "";
    for (std::size_t c = 0; c < kNumCategories; ++c) {
      out << row.method << ',' << format_number(row.ratio) << ','
          << format_number(row.mean_achieved) << ',' << jac << ','
          << category_name(static_cast<Category>(c)) << ',' << row.removed_by_category[c]
          << '\n';
    }
  }
  return out.str();
}

std::string ComparisonReport::to_markdown() const {
  std::ostringstream out;
  out << "# Simplification comparison\n\n"
      << "Task metrics (MRR, BLEU) need fine-tuned models and are not computed here.\n\n"
      << "| Method | Ratio | Snippets | Mean achieved (%) | Jaccard vs leancode | Removed |\n"
      << "|---|---|---|---|---|---|\n";
  for (const ComparisonRow& row : rows) {
    out << "| " << row.method << " | " << format_number(row.ratio) << " | " << row.snippets
        << " | " << format_number(row.mean_achieved) << " | "
        << (row.jaccard_vs_leancode ? format_number(*row.jaccard_vs_leancode) : "-") << " | "
        << row.removed_total << " |\n";
  }
  out << "\n## Removed tokens by statement category\n\n| Method | Ratio |";
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    out << ' ' << category_display_name(static_cast<Category>(c)) << " |";
  }
  out << "\n|---|---|";
  for (std::size_t c = 0; c < kNumCategories; ++c) out << "---|";
  out << '\n';
  for (const ComparisonRow& row : rows) {
    out << "| " << row.method << " | " << format_number(row.ratio) << " |";
    for (std::size_t c = 0; c < kNumCategories; ++c) out << ' ' << row.removed_by_category[c] << " |";
    out << '\n';
  }
  out << "\n## Score lookup levels\n\n| Method | Ratio |";
  for (std::size_t f = 0; f < kNumFallbackLevels; ++f) {
    out << ' ' << fallback_level_name(static_cast<FallbackLevel>(f)) << " |";
  }
  out << "\n|---|---|";
  for (std::size_t f = 0; f < kNumFallbackLevels; ++f) out << "---|";
  out << '\n';
  for (const ComparisonRow& row : rows) {
    out << "| " << row.method << " | " << format_number(row.ratio) << " |";
    for (std::size_t f = 0; f < kNumFallbackLevels; ++f) out << ' ' << row.fallback[f] << " |";
    out << '\n';
  }
  return out.str();
}

}  // namespace leancode
