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

#include <algorithm>

#include "leancode/error.hpp"

namespace leancode {

namespace {

using nlohmann::json;

json parse_line(std::string_view line) {
  try {
    json j = json::parse(line.begin(), line.end());
    if (!j.is_object()) throw Error(ErrorCode::kMalformedRecord, "line is not a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, e.what());
  }
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord, e.what());
  }
}

Category require_category(const json& j) {
  const auto name = j.get<std::string>();
  auto c = parse_category(name);
  if (!c) throw Error(ErrorCode::kMalformedRecord, "unknown category '" + name + "'");
  return *c;
}

}  // namespace

CorpusRecord parse_corpus_record(std::string_view line) {
  const json j = parse_line(line);
  return guarded([&] {
    CorpusRecord r;
    const json& id = j.at("id");
    r.id = id.is_string() ? id.get<std::string>() : id.dump();
    r.code = j.at("code").get<std::string>();
    if (auto it = j.find("docstring"); it != j.end() && it->is_string()) {
      r.docstring = it->get<std::string>();
    }
    if (r.code.empty()) throw Error(ErrorCode::kMalformedRecord, "empty code for id " + r.id);
    return r;
  });
}

json to_json(const CorpusRecord& r) {
  json j{{"id", r.id}, {"code", r.code}};
  if (r.docstring) j["docstring"] = *r.docstring;
  return j;
}

json lexed_to_json(const Snippet& snippet) {
  json tokens = json::array();
  for (const CodeToken& t : snippet.tokens) {
    tokens.push_back({{"text", t.text},
                      {"kind", std::string(token_kind_name(t.kind))},
                      {"index", t.index},
                      {"line", t.line},
                      {"col", t.col}});
  }
  return {{"id", snippet.id}, {"tokens", std::move(tokens)}};
}

json categorized_to_json(std::string_view id, const StatementSet& statements) {
  json ranges = json::array();
  for (const Statement& st : statements.statements) {
    ranges.push_back(json::array(
        {st.range.begin, st.range.end, std::string(category_name(st.category))}));
  }
  return {{"id", std::string(id)}, {"ranges", std::move(ranges)},
          {"degraded", statements.degraded}};
}

StatementSet statements_from_json(const json& j) {
  return guarded([&] {
    StatementSet out;
    for (const json& r : j.at("ranges")) {
      Statement st;
      st.range.begin = r.at(0).get<int>();
      st.range.end = r.at(1).get<int>();
      st.category = require_category(r.at(2));
      out.statements.push_back(st);
    }
    if (auto it = j.find("degraded"); it != j.end()) out.degraded = it->get<bool>();
    return out;
  });
}

AttentionRecord parse_attention_record(std::string_view line) {
  const json j = parse_line(line);
  return guarded([&] {
    AttentionRecord r;
    const json& id = j.at("snippet_id");
    r.snippet_id = id.is_string() ? id.get<std::string>() : id.dump();
    r.token_index = j.at("token_index").get<int>();
    r.token_text = j.at("token_text").get<std::string>();
    r.category = require_category(j.at("category"));
    const json& score = j.at("score");
    if (!score.is_number()) throw Error(ErrorCode::kMalformedRecord, "score is not a number");
    r.score = score.get<double>();
    const auto kind = j.at("kind").get<std::string>();
    auto k = parse_score_kind(kind);
    if (!k) throw Error(ErrorCode::kMalformedRecord, "unknown kind '" + kind + "'");
    r.kind = *k;
    return r;
  });
}

json to_json(const AttentionRecord& r) {
  return {{"snippet_id", r.snippet_id},
          {"token_index", r.token_index},
          {"token_text", r.token_text},
          {"category", std::string(category_name(r.category))},
          {"score", r.score},
          {"kind", std::string(score_kind_name(r.kind))}};
}

json prune_to_json(std::string_view id, PruneMethod method, double ratio,
                   const PruneOutcome& outcome) {
  const PruneResult& r = outcome.result;
  json fallback = json::object();
  for (std::size_t f = 0; f < kNumFallbackLevels; ++f) {
    fallback[std::string(fallback_level_name(static_cast<FallbackLevel>(f)))] =
        r.fallback_histogram[f];
  }
  json cats = json::object();
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    if (r.per_category_removed[c] > 0) {
      cats[std::string(category_name(static_cast<Category>(c)))] = r.per_category_removed[c];
    }
  }
  json j{{"id", std::string(id)},
         {"method", std::string(prune_method_name(method))},
         {"ratio", ratio},
         {"kept_text", outcome.simplified_text},
         {"removed_indices", r.removed_indices},
         {"achieved_ratio", r.achieved_ratio},
         {"fallback_histogram", std::move(fallback)},
         {"category_histogram", std::move(cats)},
         {"n_tokens", r.n_tokens},
         {"degraded", r.degraded}};
  if (r.pre_topup_ratio) j["pre_topup_ratio"] = *r.pre_topup_ratio;
  return j;
}

PruneRecord parse_prune_record(std::string_view line) {
  const json j = parse_line(line);
  return guarded([&] {
    PruneRecord r;
    r.id = j.at("id").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.ratio = j.at("ratio").get<double>();
    r.n_tokens = j.at("n_tokens").get<std::size_t>();
    r.removed_indices = j.at("removed_indices").get<std::vector<int>>();
    r.achieved_ratio = j.at("achieved_ratio").get<double>();
    if (!std::is_sorted(r.removed_indices.begin(), r.removed_indices.end()) ||
        (!r.removed_indices.empty() &&
         (r.removed_indices.front() < 0 ||
          r.removed_indices.back() >= static_cast<int>(r.n_tokens)))) {
      throw Error(ErrorCode::kMalformedRecord, "removed_indices out of range for id " + r.id);
    }
    if (auto it = j.find("fallback_histogram"); it != j.end()) {
      for (std::size_t f = 0; f < kNumFallbackLevels; ++f) {
        r.fallback_histogram[f] =
            it->value(std::string(fallback_level_name(static_cast<FallbackLevel>(f))), 0);
      }
    }
    if (auto it = j.find("category_histogram"); it != j.end()) {
      for (auto c = it->begin(); c != it->end(); ++c) {
        auto cat = parse_category(c.key());
        if (!cat) throw Error(ErrorCode::kMalformedRecord, "unknown category '" + c.key() + "'");
        r.per_category_removed[category_index(*cat)] = c.value().get<int>();
      }
    }
    return r;
  });
}

}  // namespace leancode
