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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "leancode/error.hpp"

namespace leancode {
namespace {

PruneRecord record(std::string id, std::string method, double ratio, std::size_t n,
                   std::vector<int> removed) {
  PruneRecord r;
  r.id = std::move(id);
  r.method = std::move(method);
  r.ratio = ratio;
  r.n_tokens = n;
  r.removed_indices = std::move(removed);
  r.achieved_ratio = simplified_ratio(static_cast<long long>(n),
                                      static_cast<long long>(n - r.removed_indices.size()));
  return r;
}

TEST(SimplifiedRatioTest, Formula) {
  EXPECT_EQ(simplified_ratio(100, 70), 30.0);
  EXPECT_EQ(simplified_ratio(7, 7), 0.0);
  EXPECT_EQ(simplified_ratio(10, 0), 100.0);
  EXPECT_THROW(simplified_ratio(0, 0), Error);
  EXPECT_THROW(simplified_ratio(5, 6), Error);
  EXPECT_THROW(simplified_ratio(5, -1), Error);
}

TEST(JaccardTest, Boundaries) {
  const std::vector<int> a{1, 2, 3};
  const std::vector<int> b{4, 5};
  EXPECT_EQ(jaccard(a, a), 1.0);
  EXPECT_EQ(jaccard(a, b), 0.0);
  EXPECT_EQ(jaccard({}, {}), 1.0);
  EXPECT_EQ(jaccard(a, {}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard(a, std::vector<int>{2, 3, 4}), 0.5);
}

TEST(JaccardTest, MatchesSetAlgebra) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<int> sa;
    std::set<int> sb;
    for (int i = 0; i < 40; ++i) {
      if (rng() % 3 == 0) sa.insert(i);
      if (rng() % 2 == 0) sb.insert(i);
    }
    std::size_t both = 0;
    for (int x : sa) both += sb.count(x);
    const std::size_t either = sa.size() + sb.size() - both;
    const std::vector<int> a(sa.begin(), sa.end());
    const std::vector<int> b(sb.begin(), sb.end());
    const double want = either == 0 ? 1.0 : static_cast<double>(both) / static_cast<double>(either);
    EXPECT_EQ(jaccard(a, b), want);
  }
}

TEST(KeptIndicesTest, Complement) {
  EXPECT_EQ(record("a", "m", 0.3, 5, {1, 4}).kept_indices(), (std::vector<int>{0, 2, 3}));
}

TEST(CompareTest, SelfComparisonIsOne) {
  const std::vector<PruneRecord> recs{record("a", "leancode", 0.3, 10, {1, 2, 3}),
                                      record("b", "leancode", 0.3, 5, {0})};
  const ComparisonReport rep = compare(recs);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].jaccard_vs_leancode, 1.0);
  EXPECT_EQ(rep.rows[0].snippets, 2u);
  EXPECT_DOUBLE_EQ(rep.rows[0].mean_achieved, 25.0);
}

TEST(CompareTest, JaccardAgainstLeanCode) {
  const std::vector<PruneRecord> recs{
      record("a", "leancode", 0.5, 4, {0, 1}), record("a", "slimcode", 0.5, 4, {2, 3}),
      record("b", "leancode", 0.5, 4, {0, 1}), record("b", "slimcode", 0.5, 4, {1, 2}),
      record("a", "slimcode", 0.25, 4, {3})};
  const ComparisonReport rep = compare(recs);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_EQ(rep.rows[0].method, "leancode");
  EXPECT_EQ(rep.rows[1].method, "slimcode");
  EXPECT_EQ(rep.rows[1].ratio, 0.25);
  EXPECT_FALSE(rep.rows[1].jaccard_vs_leancode);
  EXPECT_DOUBLE_EQ(*rep.rows[2].jaccard_vs_leancode, (0.0 + 1.0 / 3.0) / 2.0);
  EXPECT_EQ(rep.rows[2].removed_total, 4);
}

TEST(CompareTest, MismatchedIds) {
  std::vector<PruneRecord> recs{record("a", "leancode", 0.3, 4, {0}),
                                record("b", "slimcode", 0.3, 4, {0})};
  try {
    compare(recs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMismatchedIds);
  }
  recs = {record("a", "leancode", 0.3, 4, {0}), record("a", "leancode", 0.3, 4, {0})};
  EXPECT_THROW(compare(recs), Error);
}

TEST(CompareTest, CsvShape) {
  const std::vector<PruneRecord> recs{record("a", "leancode", 0.3, 10, {1, 2, 3})};
  const std::string csv = compare(recs).to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "method,ratio,mean_achieved,jaccard_vs_leancode,category,removed_count");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + static_cast<long>(kNumCategories));
  EXPECT_NE(csv.find("leancode,0.3,30,1,Annotation,0\n"), std::string::npos);
  const std::string md = compare(recs).to_markdown();
  EXPECT_NE(md.find("| leancode | 0.3 | 1 | 30 | 1 | 3 |"), std::string::npos);
}

}  // namespace
}  // namespace leancode
