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

#include "leancode/score_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "leancode/error.hpp"

namespace leancode {

namespace {

constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
constexpr int kTableVersion = 1;

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

template <typename T>
void fnv_value(std::uint64_t& h, const T& v) {
  fnv_bytes(h, &v, sizeof(v));
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json entry_json(const ScoreEntry& e) {
  return {{"count", e.count}, {"sum", e.sum}, {"sum_sq", e.sum_sq}};
}

ScoreEntry entry_from(const nlohmann::json& j) {
  ScoreEntry e;
  e.count = j.at("count").get<std::int64_t>();
  e.sum = j.at("sum").get<double>();
  e.sum_sq = j.at("sum_sq").get<double>();
  if (e.count < 1) {
    throw Error(ErrorCode::kMalformedRecord, "table entry with count < 1");
  }
  return e;
}

Category category_from(const nlohmann::json& j) {
  const auto name = j.get<std::string>();
  auto c = parse_category(name);
  if (!c || *c == Category::kOther) {
    throw Error(ErrorCode::kMalformedRecord, "unknown table category '" + name + "'");
  }
  return *c;
}

}  // namespace

std::string_view score_kind_name(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kCls: return "cls";
    case ScoreKind::kEnDe: return "ende";
    case ScoreKind::kSelfAccum: return "self";
  }
  return "cls";
}

std::optional<ScoreKind> parse_score_kind(std::string_view name) {
  if (name == "cls" || name == "CLS") return ScoreKind::kCls;
  if (name == "ende" || name == "EnDe") return ScoreKind::kEnDe;
  if (name == "self" || name == "SelfAccum") return ScoreKind::kSelfAccum;
  return std::nullopt;
}

std::string_view fallback_level_name(FallbackLevel level) {
  switch (level) {
    case FallbackLevel::kTokenCategory: return "token_category";
    case FallbackLevel::kTokenGlobal: return "token_global";
    case FallbackLevel::kCategoryMean: return "category_mean";
    case FallbackLevel::kGlobalMean: return "global_mean";
  }
  return "global_mean";
}

double ScoreEntry::variance() const {
  if (count == 0) return 0.0;
  const double m = mean();
  const double v = sum_sq / static_cast<double>(count) - m * m;
  return v > 0.0 ? v : 0.0;
}

void CategoryAccumulator::merge(const CategoryAccumulator& other) {
  entry.merge(other.entry);
  max = std::max(max, other.max);
  min = std::min(min, other.min);
}

const ScoreEntry* ScoreTable::TokenRow::find(Category c) const {
  auto it = std::lower_bound(
      by_category.begin(), by_category.end(), c,
      [](const auto& p, Category key) { return p.first < key; });
  return (it != by_category.end() && it->first == c) ? &it->second : nullptr;
}

TableMeta ScoreTable::meta() const {
  return {totals_.count, build_timestamp_, hex64(digest_)};
}

void ScoreTable::check_kind(ScoreKind kind) {
  if (kind_ && *kind_ != kind) {
    throw Error(ErrorCode::kMixedKind,
                std::string("table kind ") + std::string(score_kind_name(*kind_)) +
                    " cannot accept " + std::string(score_kind_name(kind)));
  }
  kind_ = kind;
}

void ScoreTable::add(const AttentionRecord& r) {
  if (!std::isfinite(r.score)) {
    throw Error(ErrorCode::kMalformedRecord, "non-finite score for '" + r.token_text + "'");
  }
  if (r.token_index < 0 || r.token_text.empty()) {
    throw Error(ErrorCode::kMalformedRecord, "invalid token index or empty token text");
  }
  if (r.score < 0.0) {
    throw Error(ErrorCode::kNegativeScore, "score " + std::to_string(r.score) +
                                               " for '" + r.token_text + "'");
  }
  check_kind(r.kind);

  auto it = tokens_.find(std::string_view(r.token_text));
  if (it == tokens_.end()) it = tokens_.emplace(r.token_text, TokenRow{}).first;
  TokenRow& row = it->second;
  row.total.add(r.score);
  if (r.category != Category::kOther) {
    auto pos = std::lower_bound(
        row.by_category.begin(), row.by_category.end(), r.category,
        [](const auto& p, Category key) { return p.first < key; });
    if (pos == row.by_category.end() || pos->first != r.category) {
      pos = row.by_category.insert(pos, {r.category, ScoreEntry{}});
    }
    pos->second.add(r.score);
    categories_[category_index(r.category)].add(r.score);
  }
  totals_.add(r.score);

  fnv_bytes(digest_, r.snippet_id.data(), r.snippet_id.size());
  fnv_value(digest_, r.token_index);
  fnv_bytes(digest_, r.token_text.data(), r.token_text.size());
  fnv_value(digest_, static_cast<int>(r.category));
  fnv_value(digest_, r.score);
}

void ScoreTable::merge(const ScoreTable& other) {
  if (other.kind_) check_kind(*other.kind_);
  for (const auto& [text, src] : other.tokens_) {
    auto it = tokens_.find(std::string_view(text));
    if (it == tokens_.end()) {
      tokens_.emplace(text, src);
      continue;
    }
    TokenRow& row = it->second;
    row.total.merge(src.total);
    for (const auto& [cat, entry] : src.by_category) {
      auto pos = std::lower_bound(
          row.by_category.begin(), row.by_category.end(), cat,
          [](const auto& p, Category key) { return p.first < key; });
      if (pos == row.by_category.end() || pos->first != cat) {
        row.by_category.insert(pos, {cat, entry});
      } else {
        pos->second.merge(entry);
      }
    }
  }
  for (std::size_t i = 0; i < kNumScoredCategories; ++i) {
    categories_[i].merge(other.categories_[i]);
  }
  if (other.empty()) return;
  const bool was_empty = totals_.count == 0;
  totals_.merge(other.totals_);
  if (was_empty) {
    digest_ = other.digest_;
  } else {
    fnv_value(digest_, other.digest_);
  }
}

const ScoreTable::TokenRow* ScoreTable::token(std::string_view text) const {
  auto it = tokens_.find(text);
  return it == tokens_.end() ? nullptr : &it->second;
}

const CategoryAccumulator& ScoreTable::category(Category c) const {
  static const CategoryAccumulator kNone{};
  return c == Category::kOther ? kNone : categories_[category_index(c)];
}

LookupResult ScoreTable::lookup(std::string_view text, Category c) const {
  if (empty()) throw Error(ErrorCode::kEmptyTable, "lookup on an empty score table");
  if (const TokenRow* row = token(text)) {
    if (c != Category::kOther) {
      if (const ScoreEntry* e = row->find(c)) {
        return {e->mean(), FallbackLevel::kTokenCategory};
      }
    }
    return {row->total.mean(), FallbackLevel::kTokenGlobal};
  }
  const CategoryAccumulator& acc = category(c);
  if (acc.entry.count > 0) return {acc.entry.mean(), FallbackLevel::kCategoryMean};
  return {totals_.mean(), FallbackLevel::kGlobalMean};
}

LookupResult ScoreTable::lookup_global(std::string_view text) const {
  if (empty()) throw Error(ErrorCode::kEmptyTable, "lookup on an empty score table");
  if (const TokenRow* row = token(text)) {
    return {row->total.mean(), FallbackLevel::kTokenGlobal};
  }
  return {totals_.mean(), FallbackLevel::kGlobalMean};
}

std::vector<std::string_view> ScoreTable::sorted_tokens() const {
  std::vector<std::string_view> keys;
  keys.reserve(tokens_.size());
  for (const auto& kv : tokens_) keys.emplace_back(kv.first);
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<CategoryStats> ScoreTable::stats() const {
  struct Acc {
    double global_sum = 0.0;
    double global_var_sum = 0.0;
    double local_var_sum = 0.0;
  };
  std::array<Acc, kNumScoredCategories> acc{};
  // Sorted traversal keeps the report independent of hash-map iteration order.
  for (std::string_view key : sorted_tokens()) {
    const TokenRow& row = *token(key);
    const double mu = row.total.mean();
    const double var = row.total.variance();
    for (const auto& [cat, e] : row.by_category) {
      Acc& a = acc[category_index(cat)];
      const auto n = static_cast<double>(e.count);
      a.global_sum += n * mu;
      a.global_var_sum += n * var;
      a.local_var_sum += n * e.variance();
    }
  }
  std::vector<CategoryStats> out;
  for (Category c : scored_categories()) {
    const CategoryAccumulator& ca = categories_[category_index(c)];
    if (ca.entry.count == 0) continue;
    const Acc& a = acc[category_index(c)];
    const auto n = static_cast<double>(ca.entry.count);
    CategoryStats s;
    s.category = c;
    s.count = ca.entry.count;
    s.max = ca.max;
    s.min = ca.min;
    s.global_avg = a.global_sum / n;
    s.global_var = a.global_var_sum / n;
    s.local_avg = ca.entry.mean();
    s.local_var = a.local_var_sum / n;
    out.push_back(s);
  }
  return out;
}

std::string ScoreTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["kind"] = kind_ ? std::string(score_kind_name(*kind_)) : std::string();
  doc["version"] = kTableVersion;
  const TableMeta m = meta();
  doc["meta"] = nlohmann::json{{"build_timestamp", m.build_timestamp},
                               {"record_count", m.record_count},
                               {"source_digest", m.source_digest}};
  doc["totals"] = entry_json(totals_);
  nlohmann::json cats = nlohmann::json::array();
  for (Category c : scored_categories()) {
    const CategoryAccumulator& ca = categories_[category_index(c)];
    if (ca.entry.count == 0) continue;
    nlohmann::json j = entry_json(ca.entry);
    j["category"] = std::string(category_name(c));
    j["max"] = ca.max;
    j["min"] = ca.min;
    cats.push_back(std::move(j));
  }
  doc["categories"] = std::move(cats);
  nlohmann::json toks = nlohmann::json::array();
  for (std::string_view key : sorted_tokens()) {
    const TokenRow& row = *token(key);
    nlohmann::json j = entry_json(row.total);
    j["token"] = std::string(key);
    nlohmann::json by = nlohmann::json::array();
    for (const auto& [cat, e] : row.by_category) {
      nlohmann::json ej = entry_json(e);
      ej["category"] = std::string(category_name(cat));
      by.push_back(std::move(ej));
    }
    j["categories"] = std::move(by);
    toks.push_back(std::move(j));
  }
  doc["tokens"] = std::move(toks);
  return doc.dump(1) + "\n";
}

ScoreTable ScoreTable::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("table JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != kTableVersion) {
      throw Error(ErrorCode::kMalformedRecord, "unsupported table version");
    }
    ScoreTable t;
    const auto kind_name = doc.at("kind").get<std::string>();
    if (!kind_name.empty()) {
      auto k = parse_score_kind(kind_name);
      if (!k) throw Error(ErrorCode::kMalformedRecord, "unknown kind '" + kind_name + "'");
      t.kind_ = *k;
    }
    const auto& meta = doc.at("meta");
    t.build_timestamp_ = meta.at("build_timestamp").get<std::string>();
    t.digest_ = std::stoull(meta.at("source_digest").get<std::string>(), nullptr, 16);
    const auto& totals = doc.at("totals");
    t.totals_.count = totals.at("count").get<std::int64_t>();
    t.totals_.sum = totals.at("sum").get<double>();
    t.totals_.sum_sq = totals.at("sum_sq").get<double>();
    for (const auto& cj : doc.at("categories")) {
      CategoryAccumulator& ca = t.categories_[category_index(category_from(cj.at("category")))];
      ca.entry = entry_from(cj);
      ca.max = cj.at("max").get<double>();
      ca.min = cj.at("min").get<double>();
    }
    for (const auto& tj : doc.at("tokens")) {
      TokenRow row;
      row.total = entry_from(tj);
      for (const auto& ej : tj.at("categories")) {
        row.by_category.emplace_back(category_from(ej.at("category")), entry_from(ej));
      }
      std::sort(row.by_category.begin(), row.by_category.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      t.tokens_.emplace(tj.at("token").get<std::string>(), std::move(row));
    }
    if (meta.at("record_count").get<std::int64_t>() != t.totals_.count) {
      throw Error(ErrorCode::kMalformedRecord, "record_count disagrees with totals");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, std::string("table JSON: ") + e.what());
  }
}

bool ScoreTable::same_statistics(const ScoreTable& other) const {
  return kind_ == other.kind_ && totals_ == other.totals_ &&
         categories_ == other.categories_ && tokens_ == other.tokens_;
}

ScoreTable ingest(std::span<const AttentionRecord> records,
                  std::optional<ScoreKind> kind) {
  ScoreTable t = kind ? ScoreTable(*kind) : ScoreTable();
  for (const AttentionRecord& r : records) t.add(r);
  return t;
}

ScoreTable merge(const ScoreTable& a, const ScoreTable& b) {
  ScoreTable out = a;
  out.merge(b);
  return out;
}

}  // namespace leancode
