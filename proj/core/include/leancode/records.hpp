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

// JSONL wire formats shared by the command-line tools. Every parser throws
// Error(kMalformedRecord) on a schema violation.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "leancode/java_lex.hpp"
#include "leancode/metrics.hpp"
#include "leancode/pruner.hpp"
#include "leancode/score_table.hpp"
#include "leancode/statements.hpp"

namespace leancode {

/// Corpus line: {"id", "code", "docstring"?}.
struct CorpusRecord {
  std::string id;
  std::string code;
  std::optional<std::string> docstring;
};

CorpusRecord parse_corpus_record(std::string_view line);
nlohmann::json to_json(const CorpusRecord& r);

/// {"id", "tokens": [{"text", "kind", "index", "line", "col"}, ...]}
nlohmann::json lexed_to_json(const Snippet& snippet);

/// {"id", "ranges": [[begin, end, "Category"], ...], "degraded"}
nlohmann::json categorized_to_json(std::string_view id, const StatementSet& statements);
StatementSet statements_from_json(const nlohmann::json& j);

/// Dump line: {"snippet_id", "token_index", "token_text", "category",
/// "score", "kind"}.
AttentionRecord parse_attention_record(std::string_view line);
nlohmann::json to_json(const AttentionRecord& r);

/// {"id", "method", "ratio", "kept_text", "removed_indices",
///  "achieved_ratio", "fallback_histogram", "category_histogram",
///  "n_tokens", "degraded", "pre_topup_ratio"?}
nlohmann::json prune_to_json(std::string_view id, PruneMethod method, double ratio,
                             const PruneOutcome& outcome);
PruneRecord parse_prune_record(std::string_view line);

}  // namespace leancode
