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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include "leancode/error.hpp"
#include "leancode/parallel.hpp"
#include "leancode/records.hpp"
#include "leancode/statements.hpp"

namespace leancode::cli {

namespace {

struct LineOutcome {
  std::string output;  // empty: nothing to write
  std::string warning;
};

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

// Reads `in` in fixed-size batches, maps each non-blank line on `jobs`
// workers and writes results in input order. Error(kMalformedRecord) and
// LexError become warnings; anything else propagates.
template <typename Fn>
CommandStats map_lines(std::istream& in, std::ostream& out, std::ostream& err,
                       unsigned jobs, Fn&& fn) {
  CommandStats stats;
  std::vector<std::string> batch;
  std::vector<std::size_t> line_numbers;
  std::vector<LineOutcome> results;
  std::size_t line_no = 0;
  auto flush = [&] {
    results.assign(batch.size(), {});
    parallel_for(batch.size(), jobs, [&](std::size_t i) {
      try {
        results[i] = fn(batch[i]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kMalformedRecord &&
            e.code() != ErrorCode::kUnterminatedLiteral &&
            e.code() != ErrorCode::kEmptySnippet) {
          throw;
        }
        results[i] = {{}, e.what()};
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!results[i].warning.empty()) {
        ++stats.warnings;
        err << "skip line " << line_numbers[i] << ": " << results[i].warning << '\n';
      }
      if (!results[i].output.empty()) {
        out << results[i].output << '\n';
        ++stats.records;
      }
    }
    batch.clear();
    line_numbers.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    batch.push_back(std::move(line));
    line_numbers.push_back(line_no);
    if (batch.size() >= kBatchLines) flush();
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
  flush();
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failure");
  return stats;
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

// Output file, or stdout when the path is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

double parse_ratio(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  const bool percent = !t.empty() && t.back() == '%';
  if (percent) t.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw Error(ErrorCode::kInvalidRatio, "cannot parse ratio '" + std::string(text) + "'");
  }
  if (percent) v /= 100.0;
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidRatio, "ratio '" + std::string(text) + "' is outside [0, 1]");
  }
  return v;
}

std::string build_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CommandStats cmd_lex(std::istream& in, std::ostream& out, std::ostream& err,
                     unsigned jobs) {
  return map_lines(in, out, err, jobs, [](const std::string& line) {
    const CorpusRecord rec = parse_corpus_record(line);
    const Snippet snippet = lex(rec.code, rec.id);
    if (snippet.tokens.empty()) {
      throw Error(ErrorCode::kEmptySnippet, "no code tokens in id " + rec.id);
    }
    return LineOutcome{lexed_to_json(snippet).dump(), {}};
  });
}

CommandStats cmd_categorize(std::istream& in, std::ostream& out, std::ostream& err,
                            unsigned jobs) {
  return map_lines(in, out, err, jobs, [](const std::string& line) {
    const CorpusRecord rec = parse_corpus_record(line);
    const Snippet snippet = lex(rec.code, rec.id);
    if (snippet.tokens.empty()) {
      throw Error(ErrorCode::kEmptySnippet, "no code tokens in id " + rec.id);
    }
    return LineOutcome{categorized_to_json(rec.id, classify(snippet)).dump(), {}};
  });
}

ScoreTable cmd_build_table(std::span<std::istream* const> dumps, ScoreKind kind,
                           std::ostream& err, unsigned jobs, CommandStats& stats) {
  std::vector<ScoreTable> shards(dumps.size(), ScoreTable(kind));
  std::vector<std::vector<std::string>> notes(dumps.size());
  parallel_for(dumps.size(), jobs, [&](std::size_t s) {
    std::istream& in = *dumps[s];
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_blank(line)) continue;
      AttentionRecord rec;
      try {
        rec = parse_attention_record(line);
      } catch (const Error& e) {
        notes[s].push_back("shard " + std::to_string(s) + " line " + std::to_string(line_no) +
                           ": " + e.what());
        continue;
      }
      // Kind and sign violations are hard errors; a non-finite score is
      // reported by add() as MalformedRecord and skipped.
      try {
        shards[s].add(rec);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kMalformedRecord) throw;
        notes[s].push_back("shard " + std::to_string(s) + " line " + std::to_string(line_no) +
                           ": " + e.what());
      }
    }
    if (in.bad()) throw Error(ErrorCode::kIo, "read failure in shard " + std::to_string(s));
  });
  ScoreTable table(kind);
  for (std::size_t s = 0; s < shards.size(); ++s) {
    table.merge(shards[s]);
    for (const std::string& n : notes[s]) err << "skip " << n << '\n';
    stats.warnings += notes[s].size();
  }
  stats.records = static_cast<std::size_t>(table.record_count());
  return table;
}

std::vector<int> local_average_ranks(const std::vector<CategoryStats>& rows) {
  std::vector<int> ranks(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int rank = 1;
    for (const CategoryStats& other : rows) {
      if (other.local_avg > rows[i].local_avg) ++rank;
    }
    ranks[i] = rank;
  }
  return ranks;
}

std::string format_stats_markdown(const std::vector<CategoryStats>& rows) {
  std::ostringstream out;
  out << "| Category | Count | Max | Min | Global | Global_variance | Category-local | "
         "Local_variance | Local rank |\n"
      << "|---|---|---|---|---|---|---|---|---|\n";
  const std::vector<int> ranks = local_average_ranks(rows);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CategoryStats& s = rows[i];
    out << "| " << category_display_name(s.category) << " | " << s.count << " | "
        << format_fixed(s.max, 5) << " | " << format_fixed(s.min, 5) << " | "
        << format_fixed(s.global_avg, 5) << " | " << format_fixed(s.global_var, 5) << " | "
        << format_fixed(s.local_avg, 5) << " | " << format_fixed(s.local_var, 5) << " | "
        << ranks[i] << " |\n";
  }
  return out.str();
}

std::string cmd_stats(const ScoreTable& table) {
  std::ostringstream out;
  out << "# Attention statistics by statement category\n\nkind: "
      << (table.kind() ? score_kind_name(*table.kind()) : "none")
      << ", records: " << table.record_count() << "\n\n"
      << format_stats_markdown(table.stats());
  return out.str();
}

CommandStats cmd_prune(std::istream& corpus, const ScoreTable& table,
                       const PruneConfig& config, std::ostream& out, std::ostream& err,
                       unsigned jobs) {
  if (table.empty() && config.method != PruneMethod::kSlimCode) {
    throw Error(ErrorCode::kEmptyTable, "pruning needs a non-empty score table");
  }
  return map_lines(corpus, out, err, jobs, [&](const std::string& line) {
    const CorpusRecord rec = parse_corpus_record(line);
    const Snippet snippet = lex(rec.code, rec.id);
    if (snippet.tokens.empty()) {
      throw Error(ErrorCode::kEmptySnippet, "no code tokens in id " + rec.id);
    }
    const PruneOutcome outcome = prune(snippet, classify(snippet), table, config);
    return LineOutcome{prune_to_json(rec.id, config.method, config.ratio, outcome).dump(), {}};
  });
}

CommandStats cmd_compare(std::span<std::istream* const> inputs, std::ostream& csv,
                         std::ostream* markdown, std::ostream& err) {
  CommandStats stats;
  std::vector<PruneRecord> records;
  for (std::size_t f = 0; f < inputs.size(); ++f) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*inputs[f], line)) {
      ++line_no;
      if (is_blank(line)) continue;
      try {
        records.push_back(parse_prune_record(line));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kMalformedRecord) throw;
        ++stats.warnings;
        err << "skip input " << f << " line " << line_no << ": " << e.what() << '\n';
      }
    }
  }
  const ComparisonReport report = compare(records);
  csv << report.to_csv();
  if (markdown) *markdown << report.to_markdown();
  stats.records = report.rows.size();
  return stats;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Attention-guided token pruning for Java code snippets"};
  app.require_subcommand(1);
  unsigned jobs = default_jobs();
  app.add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string input;
  std::string out_path;

  auto* lex_cmd = app.add_subcommand("lex", "Lex corpus JSONL into token lists");
  lex_cmd->add_option("input,-i,--input", input, "Corpus JSONL ({id, code})")->required();
  lex_cmd->add_option("-o,--out", out_path, "Output JSONL (default stdout)");

  auto* cat_cmd = app.add_subcommand("categorize", "Split and categorize statements");
  cat_cmd->add_option("input,-i,--input", input, "Corpus JSONL ({id, code})")->required();
  cat_cmd->add_option("-o,--out", out_path, "Output JSONL (default stdout)");

  std::vector<std::string> dumps;
  std::string kind_name;
  auto* build_cmd = app.add_subcommand("build-table", "Aggregate attention dumps into a table");
  build_cmd->add_option("--attention", dumps, "Attention dump JSONL shard(s)")->required();
  build_cmd->add_option("--kind", kind_name, "cls | ende | self")
      ->required()
      ->check(CLI::IsMember({"cls", "ende", "self", "CLS", "EnDe", "SelfAccum"}));
  build_cmd->add_option("-o,--out", out_path, "Table JSON (default stdout)");

  std::string table_path;
  auto* stats_cmd = app.add_subcommand("stats", "Per-category attention statistics report");
  stats_cmd->add_option("--table", table_path, "Table JSON")->required();
  stats_cmd->add_option("-o,--out", out_path, "Markdown report (default stdout)");

  std::string method_name = "leancode";
  std::string ratio_text;
  bool protect_signature = false;
  auto* prune_cmd = app.add_subcommand("prune", "Remove low-importance tokens");
  prune_cmd->add_option("input,-i,--input", input, "Corpus JSONL ({id, code})")->required();
  prune_cmd->add_option("--table", table_path, "Table JSON (unused by slimcode)");
  prune_cmd->add_option("--method", method_name, "leancode | dietcode | slimcode");
  prune_cmd->add_option("--ratio", ratio_text, "Fraction (0.3) or percent (30%)")->required();
  prune_cmd->add_flag("--protect-signature", protect_signature,
                      "Remove method-signature tokens only after all others");
  prune_cmd->add_option("-o,--out", out_path, "Output JSONL (default stdout)");

  std::vector<std::string> inputs;
  std::string md_path;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare prune outputs across methods");
  cmp_cmd->add_option("--inputs", inputs, "Prune JSONL files")->required();
  cmp_cmd->add_option("-o,--out", out_path, "CSV report (default stdout)");
  cmp_cmd->add_option("--markdown", md_path, "Also write a Markdown report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CommandStats stats;
  try {
    if (*lex_cmd || *cat_cmd) {
      std::ifstream in = open_input(input);
      Output out(out_path);
      stats = *lex_cmd ? cmd_lex(in, out.stream(), std::cerr, jobs)
                       : cmd_categorize(in, out.stream(), std::cerr, jobs);
    } else if (*build_cmd) {
      std::vector<std::ifstream> files;
      files.reserve(dumps.size());
      for (const std::string& p : dumps) files.push_back(open_input(p));
      std::vector<std::istream*> streams;
      for (auto& f : files) streams.push_back(&f);
      ScoreTable table =
          cmd_build_table(streams, *parse_score_kind(kind_name), std::cerr, jobs, stats);
      table.set_build_timestamp(build_timestamp());
      Output out(out_path);
      out.stream() << table.to_json();
      out.stream().flush();
      if (!out.stream()) throw Error(ErrorCode::kIo, "write failure");
    } else if (*stats_cmd) {
      const ScoreTable table = ScoreTable::from_json(read_file(table_path));
      Output out(out_path);
      out.stream() << cmd_stats(table);
      stats.records = table.stats().size();
    } else if (*prune_cmd) {
      PruneConfig config;
      config.method = parse_prune_method(method_name);
      config.ratio = parse_ratio(ratio_text);
      config.protect_signature = protect_signature;
      ScoreTable table;
      if (!table_path.empty()) {
        table = ScoreTable::from_json(read_file(table_path));
      } else if (config.method != PruneMethod::kSlimCode) {
        throw Error(ErrorCode::kEmptyTable, "--table is required for " + method_name);
      }
      std::ifstream in = open_input(input);
      Output out(out_path);
      stats = cmd_prune(in, table, config, out.stream(), std::cerr, jobs);
    } else if (*cmp_cmd) {
      std::vector<std::ifstream> files;
      files.reserve(inputs.size());
      for (const std::string& p : inputs) files.push_back(open_input(p));
      std::vector<std::istream*> streams;
      for (auto& f : files) streams.push_back(&f);
      Output out(out_path);
      std::unique_ptr<std::ofstream> md;
      if (!md_path.empty()) {
        md = std::make_unique<std::ofstream>(md_path, std::ios::binary | std::ios::trunc);
        if (!*md) throw Error(ErrorCode::kIo, "cannot write '" + md_path + "'");
      }
      stats = cmd_compare(streams, out.stream(), md.get(), std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n' << "warnings=" << stats.warnings << '\n';
    return 1;
  }
  std::cerr << "records=" << stats.records << " warnings=" << stats.warnings << '\n';
  return 0;
}

}  // namespace leancode::cli
