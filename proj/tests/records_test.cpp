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

#include "leancode/records.hpp"

#include <string>

#include "gtest/gtest.h"
#include "leancode/error.hpp"

namespace leancode {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

TEST(CorpusRecordTest, Parse) {
  const CorpusRecord r = parse_corpus_record(R"({"id": 7, "code": "x;", "docstring": "d"})");
  EXPECT_EQ(r.id, "7");
  EXPECT_EQ(r.code, "x;");
  EXPECT_EQ(r.docstring, "d");
  EXPECT_EQ(code_of([] { parse_corpus_record(R"({"id": "a", "code": ""})"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_corpus_record(R"({"id": "a"})"); }), ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_corpus_record("[1]"); }), ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_corpus_record("{oops"); }), ErrorCode::kMalformedRecord);
}

TEST(AttentionRecordTest, RoundTrip) {
  const AttentionRecord r{"s1", 3, "foo", Category::kReturn, 0.25, ScoreKind::kEnDe};
  const AttentionRecord back = parse_attention_record(to_json(r).dump());
  EXPECT_EQ(back.snippet_id, "s1");
  EXPECT_EQ(back.token_index, 3);
  EXPECT_EQ(back.token_text, "foo");
  EXPECT_EQ(back.category, Category::kReturn);
  EXPECT_EQ(back.score, 0.25);
  EXPECT_EQ(back.kind, ScoreKind::kEnDe);
  EXPECT_EQ(code_of([] {
              parse_attention_record(
                  R"({"snippet_id":"s","token_index":0,"token_text":"a","category":"Loop","score":1,"kind":"cls"})");
            }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] {
              parse_attention_record(
                  R"({"snippet_id":"s","token_index":0,"token_text":"a","category":"For","score":"1","kind":"cls"})");
            }),
            ErrorCode::kMalformedRecord);
}

TEST(CategorizedTest, RoundTrip) {
  const Snippet s = lex("void f() { return; }");
  const StatementSet set = classify(s);
  const StatementSet back = statements_from_json(categorized_to_json("x", set));
  EXPECT_EQ(back.statements, set.statements);
  EXPECT_EQ(back.degraded, set.degraded);
}

TEST(LexedTest, Shape) {
  const auto j = lexed_to_json(lex("a + 1", "id1"));
  EXPECT_EQ(j.at("id"), "id1");
  ASSERT_EQ(j.at("tokens").size(), 3u);
  EXPECT_EQ(j.at("tokens")[2].at("kind"), "NumberLiteral");
  EXPECT_EQ(j.at("tokens")[2].at("col"), 5);
}

TEST(PruneRecordTest, RoundTrip) {
  const Snippet s = lex("return a + b;");
  PruneOutcome o;
  o.result = make_prune_result(s.tokens, classify(s).token_categories(s.size()), {1, 3});
  o.result.fallback_histogram = {1, 2, 1, 1};
  o.simplified_text = detokenize(o.result.kept);
  const auto j = prune_to_json("p", PruneMethod::kSlimCode, 0.4, o);
  EXPECT_EQ(j.at("kept_text"), "return + ;");
  EXPECT_FALSE(j.contains("pre_topup_ratio"));
  const PruneRecord r = parse_prune_record(j.dump());
  EXPECT_EQ(r.id, "p");
  EXPECT_EQ(r.method, "slimcode");
  EXPECT_EQ(r.ratio, 0.4);
  EXPECT_EQ(r.n_tokens, 5u);
  EXPECT_EQ(r.removed_indices, (std::vector<int>{1, 3}));
  EXPECT_EQ(r.fallback_histogram, o.result.fallback_histogram);
  EXPECT_EQ(r.per_category_removed, o.result.per_category_removed);
  EXPECT_EQ(r.achieved_ratio, o.result.achieved_ratio);
  EXPECT_EQ(code_of([] {
              parse_prune_record(
                  R"({"id":"p","method":"m","ratio":0.1,"n_tokens":2,"removed_indices":[5],"achieved_ratio":50})");
            }),
            ErrorCode::kMalformedRecord);
}

}  // namespace
}  // namespace leancode
