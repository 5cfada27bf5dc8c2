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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leancode/pruner.hpp"
#include "leancode/score_table.hpp"

namespace leancode::cli {

/// Per-command counters. Hard errors are thrown instead of counted.
struct CommandStats {
  std::size_t records = 0;   // lines written
  std::size_t warnings = 0;  // lines skipped (malformed, unlexable)
};

/// Lines are processed in batches of this many, so memory stays bounded by
/// the batch rather than the corpus.
inline constexpr std::size_t kBatchLines = 2048;

/// Parses "0.3" or "30%" into a fraction in [0, 1]; throws Error(kInvalidRatio).
double parse_ratio(std::string_view text);

/// ISO-8601 UTC build stamp; honours SOURCE_DATE_EPOCH for reproducible
/// builds.
std::string build_timestamp();

CommandStats cmd_lex(std::istream& in, std::ostream& out, std::ostream& err,
                     unsigned jobs);
CommandStats cmd_categorize(std::istream& in, std::ostream& out, std::ostream& err,
                            unsigned jobs);

/// Each stream is ingested as one shard; shards are merged in order.
/// MixedKind and NegativeScore are hard errors, malformed lines warnings.
ScoreTable cmd_build_table(std::span<std::istream* const> dumps, ScoreKind kind,
                           std::ostream& err, unsigned jobs, CommandStats& stats);

/// Markdown report with one row per populated category in report order.
std::string format_stats_markdown(const std::vector<CategoryStats>& rows);
/// Competition ranks (1 = largest) of the category-local averages.
std::vector<int> local_average_ranks(const std::vector<CategoryStats>& rows);
/// Title, table kind and record count, then the per-category table.
std::string cmd_stats(const ScoreTable& table);

CommandStats cmd_prune(std::istream& corpus, const ScoreTable& table,
                       const PruneConfig& config, std::ostream& out, std::ostream& err,
                       unsigned jobs);

/// Reads prune JSONL streams and writes the CSV report; optionally the
/// Markdown report as well.
CommandStats cmd_compare(std::span<std::istream* const> inputs, std::ostream& csv,
                         std::ostream* markdown, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace leancode::cli
