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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "leancode/baselines.hpp"
#include "leancode/pruner.hpp"
#include "leancode/records.hpp"

namespace {

std::vector<std::string> lines(const std::string& name) {
  std::ifstream in(std::string(LEANCODE_FIXTURE_DIR) + "/" + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

const std::vector<std::string>& sources() {
  static const auto src = [] {
    std::vector<std::string> out;
    for (const auto& l : lines("corpus.jsonl")) out.push_back(leancode::parse_corpus_record(l).code);
    return out;
  }();
  return src;
}

const std::vector<leancode::Snippet>& snippets() {
  static const auto s = [] {
    std::vector<leancode::Snippet> out;
    for (const auto& src : sources()) out.push_back(leancode::lex(src));
    return out;
  }();
  return s;
}

const leancode::ScoreTable& table() {
  static const auto t = [] {
    std::ifstream in(std::string(LEANCODE_FIXTURE_DIR) + "/corpus_table.json");
    std::ostringstream ss;
    ss << in.rdbuf();
    return leancode::ScoreTable::from_json(ss.str());
  }();
  return t;
}

void BM_Lex(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& src : sources()) benchmark::DoNotOptimize(leancode::lex_tokens(src));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sources().size()));
}
BENCHMARK(BM_Lex);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& s : snippets()) benchmark::DoNotOptimize(leancode::classify(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(snippets().size()));
}
BENCHMARK(BM_Classify);

void BM_Prune(benchmark::State& state) {
  leancode::PruneConfig cfg;
  cfg.ratio = 0.3;
  cfg.method = static_cast<leancode::PruneMethod>(state.range(0));
  state.SetLabel(std::string(leancode::prune_method_name(cfg.method)));
  std::vector<leancode::StatementSet> sets;
  for (const auto& s : snippets()) sets.push_back(leancode::classify(s));
  for (auto _ : state) {
    for (std::size_t i = 0; i < snippets().size(); ++i) {
      benchmark::DoNotOptimize(leancode::prune(snippets()[i], sets[i], table(), cfg));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(snippets().size()));
}
BENCHMARK(BM_Prune)->Arg(0)->Arg(1)->Arg(2);

void BM_SelectLowest(benchmark::State& state) {
  std::vector<double> scores(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i] = static_cast<double>((i * 7919) % 257);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leancode::select_lowest(scores, scores.size() * 3 / 10));
  }
}
BENCHMARK(BM_SelectLowest)->Range(16, 4096);

void BM_Ingest(benchmark::State& state) {
  std::vector<leancode::AttentionRecord> records;
  for (const auto& l : lines("corpus_dump.jsonl")) records.push_back(leancode::parse_attention_record(l));
  for (auto _ : state) benchmark::DoNotOptimize(leancode::ingest(records));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_Ingest);

}  // namespace

BENCHMARK_MAIN();
