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

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "leancode/error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace leancode {
namespace {

AttentionRecord rec(std::string token, Category c, double score,
                    ScoreKind kind = ScoreKind::kCls) {
  return {"s", 0, std::move(token), c, score, kind};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

std::vector<AttentionRecord> random_records(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> tok(0, 299);
  std::uniform_int_distribution<int> cat(0, static_cast<int>(kNumCategories) - 1);
  std::uniform_real_distribution<double> score(0.0, 5.0);
  std::vector<AttentionRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"s" + std::to_string(i / 50), static_cast<int>(i % 50),
                   "t" + std::to_string(tok(rng)), static_cast<Category>(cat(rng)), score(rng),
                   ScoreKind::kEnDe});
  }
  return out;
}

TEST(ScoreTableTest, CategoryLocalMean) {
  const ScoreTable t = ingest(std::vector{rec("foo", Category::kReturn, 2.0),
                                          rec("foo", Category::kReturn, 4.0)});
  const auto r = t.lookup("foo", Category::kReturn);
  EXPECT_EQ(r.score, 3.0);
  EXPECT_EQ(r.level, FallbackLevel::kTokenCategory);
  EXPECT_EQ(t.token("foo")->find(Category::kReturn)->count, 2);
}

TEST(ScoreTableTest, GlobalVersusLocal) {
  const ScoreTable t = ingest(std::vector{rec("foo", Category::kReturn, 2.0),
                                          rec("foo", Category::kFor, 6.0)});
  EXPECT_EQ(t.lookup_global("foo").score, 4.0);
  EXPECT_EQ(t.lookup("foo", Category::kReturn).score, 2.0);
  EXPECT_EQ(t.lookup("foo", Category::kFor).score, 6.0);
}

TEST(ScoreTableTest, FallbackChain) {
  const ScoreTable t = ingest(std::vector{rec("foo", Category::kReturn, 2.0),
                                          rec("bar", Category::kReturn, 4.0),
                                          rec("baz", Category::kOther, 9.0)});
  auto r = t.lookup("foo", Category::kFor);
  EXPECT_EQ(r.level, FallbackLevel::kTokenGlobal);
  EXPECT_EQ(r.score, 2.0);
  r = t.lookup("zzz", Category::kReturn);
  EXPECT_EQ(r.level, FallbackLevel::kCategoryMean);
  EXPECT_EQ(r.score, 3.0);
  r = t.lookup("zzz", Category::kOther);
  EXPECT_EQ(r.level, FallbackLevel::kGlobalMean);
  EXPECT_EQ(r.score, 5.0);
  r = t.lookup("zzz", Category::kFor);
  EXPECT_EQ(r.level, FallbackLevel::kGlobalMean);
  r = t.lookup("baz", Category::kOther);
  EXPECT_EQ(r.level, FallbackLevel::kTokenGlobal);
  EXPECT_EQ(r.score, 9.0);
  EXPECT_EQ(code_of([] { ScoreTable().lookup("x", Category::kFor); }), ErrorCode::kEmptyTable);
}

TEST(ScoreTableTest, HandComputedStats) {
  const ScoreTable t = ingest(std::vector{rec("foo", Category::kReturn, 1.0),
                                          rec("foo", Category::kReturn, 3.0)});
  const auto rows = t.stats();
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].category, Category::kReturn);
  EXPECT_EQ(rows[0].count, 2);
  EXPECT_EQ(rows[0].max, 3.0);
  EXPECT_EQ(rows[0].min, 1.0);
  EXPECT_EQ(rows[0].local_avg, 2.0);
  EXPECT_EQ(rows[0].local_var, 1.0);
  EXPECT_EQ(rows[0].global_avg, 2.0);
  EXPECT_EQ(rows[0].global_var, 1.0);
}

TEST(ScoreTableTest, GlobalStatsWeightByOccurrence) {
  // foo: Return {1, 3}, For {8}; bar: Return {5}.
  const ScoreTable t = ingest(std::vector{
      rec("foo", Category::kReturn, 1.0), rec("foo", Category::kReturn, 3.0),
      rec("foo", Category::kFor, 8.0), rec("bar", Category::kReturn, 5.0)});
  const auto rows = t.stats();
  ASSERT_EQ(rows.size(), 2u);
  const CategoryStats& ret = rows[0];
  EXPECT_EQ(ret.category, Category::kReturn);
  EXPECT_DOUBLE_EQ(ret.global_avg, (2 * 4.0 + 5.0) / 3);
  EXPECT_DOUBLE_EQ(ret.global_var, (2 * (26.0 / 3) + 0.0) / 3);
  EXPECT_DOUBLE_EQ(ret.local_avg, 3.0);
  EXPECT_DOUBLE_EQ(ret.local_var, (2 * 1.0 + 0.0) / 3);
}

TEST(ScoreTableTest, MatchesTwoPassOracle) {
  const auto records = random_records(10000, 5);
  const ScoreTable t = ingest(records);
  oracle::GroupBy o;
  for (const auto& r : records) o.add(r);
  for (const auto& [token, scores] : o.tokens()) {
    EXPECT_NEAR(t.lookup_global(token).score, oracle::GroupBy::mean(scores), 1e-12);
    EXPECT_NEAR(t.token(token)->total.variance(), oracle::GroupBy::variance(scores), 1e-12);
  }
  for (const auto& [key, scores] : o.pairs()) {
    EXPECT_NEAR(t.lookup(key.first, key.second).score, oracle::GroupBy::mean(scores), 1e-12);
  }
  for (const CategoryStats& s : t.stats()) {
    const auto want = o.stats(s.category);
    ASSERT_TRUE(want);
    EXPECT_EQ(s.count, want->count);
    EXPECT_EQ(s.max, want->max);
    EXPECT_EQ(s.min, want->min);
    EXPECT_NEAR(s.global_avg, want->global_avg, 1e-12);
    EXPECT_NEAR(s.global_var, want->global_var, 1e-12);
    EXPECT_NEAR(s.local_avg, want->local_avg, 1e-12);
    EXPECT_NEAR(s.local_var, want->local_var, 1e-12);
  }
  EXPECT_NEAR(t.global_mean(), o.global_mean(), 1e-12);
}

TEST(ScoreTableTest, MergeEqualsConcatenation) {
  const auto r1 = random_records(3000, 1);
  const auto r2 = random_records(2000, 2);
  std::vector<AttentionRecord> both = r1;
  both.insert(both.end(), r2.begin(), r2.end());
  const ScoreTable merged = merge(ingest(r1), ingest(r2));
  const ScoreTable single = ingest(both);
  EXPECT_EQ(merged.record_count(), single.record_count());
  for (std::string_view tok : single.sorted_tokens()) {
    const double want = single.lookup_global(tok).score;
    EXPECT_NEAR(merged.lookup_global(tok).score, want, 1e-9 * std::abs(want));
  }
  for (Category c : scored_categories()) {
    EXPECT_EQ(merged.category(c).entry.count, single.category(c).entry.count);
    EXPECT_EQ(merged.category(c).max, single.category(c).max);
  }
}

TEST(ScoreTableTest, MergeWithEmptyIsIdentity) {
  const ScoreTable t = ingest(random_records(500, 3));
  EXPECT_TRUE(merge(t, ScoreTable()).same_statistics(t));
  EXPECT_TRUE(merge(ScoreTable(), t).same_statistics(t));
  EXPECT_EQ(merge(ScoreTable(), t).meta().source_digest, t.meta().source_digest);
}

TEST(ScoreTableTest, KindGuards) {
  ScoreTable cls = ingest(std::vector{rec("a", Category::kFor, 1.0)});
  ScoreTable ende = ingest(std::vector{rec("a", Category::kFor, 1.0, ScoreKind::kEnDe)});
  EXPECT_EQ(code_of([&] { merge(cls, ende); }), ErrorCode::kMixedKind);
  EXPECT_EQ(code_of([&] { cls.add(rec("b", Category::kFor, 1.0, ScoreKind::kEnDe)); }),
            ErrorCode::kMixedKind);
  EXPECT_EQ(code_of([] { ingest(std::vector{rec("a", Category::kFor, 1.0)}, ScoreKind::kSelfAccum); }),
            ErrorCode::kMixedKind);
  EXPECT_EQ(cls.kind(), ScoreKind::kCls);
  EXPECT_FALSE(ScoreTable().kind());
}

TEST(ScoreTableTest, RecordValidation) {
  ScoreTable t;
  EXPECT_EQ(code_of([&] { t.add(rec("a", Category::kFor, -0.5)); }), ErrorCode::kNegativeScore);
  EXPECT_EQ(code_of([&] { t.add(rec("a", Category::kFor, std::nan(""))); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([&] {
              t.add(rec("a", Category::kFor, std::numeric_limits<double>::infinity()));
            }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([&] { t.add(rec("", Category::kFor, 1.0)); }), ErrorCode::kMalformedRecord);
  EXPECT_TRUE(t.empty());
}

TEST(ScoreTableTest, JsonRoundTripIsByteIdentical) {
  ScoreTable t = ingest(random_records(2000, 9));
  t.set_build_timestamp("2026-01-01T00:00:00Z");
  const std::string once = t.to_json();
  const ScoreTable back = ScoreTable::from_json(once);
  EXPECT_EQ(back.to_json(), once);
  EXPECT_TRUE(back.same_statistics(t));
  EXPECT_EQ(back.meta().record_count, 2000);
  EXPECT_EQ(back.meta().build_timestamp, "2026-01-01T00:00:00Z");
  for (std::string_view tok : t.sorted_tokens()) {
    EXPECT_EQ(back.lookup(tok, Category::kReturn).score, t.lookup(tok, Category::kReturn).score);
  }
}

TEST(ScoreTableTest, JsonRejectsGarbage) {
  EXPECT_EQ(code_of([] { ScoreTable::from_json("not json"); }), ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { ScoreTable::from_json("{\"kind\":\"cls\",\"version\":99}"); }),
            ErrorCode::kMalformedRecord);
}

TEST(ScoreTableTest, KindNames) {
  EXPECT_EQ(parse_score_kind("EnDe"), ScoreKind::kEnDe);
  EXPECT_EQ(parse_score_kind("self"), ScoreKind::kSelfAccum);
  EXPECT_EQ(score_kind_name(ScoreKind::kCls), "cls");
  EXPECT_FALSE(parse_score_kind("x"));
}

}  // namespace
}  // namespace leancode
