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
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "leancode/java_lex.hpp"
#include "leancode/records.hpp"
#include "leancode/score_table.hpp"
#include "leancode/statements.hpp"

#ifndef LEANCODE_FIXTURE_DIR
#error "LEANCODE_FIXTURE_DIR must be defined"
#endif

namespace leancode::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(LEANCODE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> fixture_lines(const std::string& name) {
  std::istringstream in(read_fixture(name));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::vector<Snippet> fixture_corpus() {
  std::vector<Snippet> out;
  for (const std::string& line : fixture_lines("corpus.jsonl")) {
    const CorpusRecord rec = parse_corpus_record(line);
    out.push_back(lex(rec.code, rec.id));
  }
  return out;
}

inline ScoreTable fixture_table(const std::string& dump) {
  std::vector<AttentionRecord> records;
  for (const std::string& line : fixture_lines(dump)) {
    records.push_back(parse_attention_record(line));
  }
  return ingest(records);
}

// Random Java-like methods built from statement templates.
class CodeGen {
 public:
  explicit CodeGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string name() {
    static const char* const kNames[] = {"count", "total", "value", "item", "node", "buffer",
                                         "index", "result", "name", "user", "size", "data"};
    return kNames[uniform(0, 11)];
  }

  std::string statement(int depth = 0) {
    const std::string a = name();
    const std::string b = name();
    const std::string k = std::to_string(uniform(0, 99));
    switch (uniform(0, depth > 1 ? 8 : 15)) {
      case 0: return "int " + a + " = " + b + " + " + k + ";";
      case 1: return a + " += " + k + ";";
      case 2: return a + ".setName(\"" + b + "\");";
      case 3: return "String " + a + " = " + b + ".getName();";
      case 4: return "log.info(\"" + a + " " + k + "\");";
      case 5: return a + "." + b + "(" + k + ");";
      case 6: return "return " + a + ";";
      case 7: return "throw new IllegalStateException(\"" + a + "\");";
      case 8: return a + "++;";
      case 9: return "if (" + a + " > " + k + ") { " + statement(depth + 1) + " }";
      case 10:
        return "for (int i = 0; i < " + a + ".length; i++) { " + statement(depth + 1) + " " +
               (uniform(0, 1) ? "continue;" : "break;") + " }";
      case 11: return "while (" + a + " < " + b + ") { " + statement(depth + 1) + " }";
      case 12:
        return "try { " + statement(depth + 1) + " } catch (Exception e) { " +
               statement(depth + 1) + " } finally { " + b + ".close(); }";
      case 13: return "synchronized (" + a + ") { " + statement(depth + 1) + " }";
      case 14:
        return "switch (" + a + ") { case " + k + ": " + statement(depth + 1) +
               " break; default: " + statement(depth + 1) + " }";
      default: return "@SuppressWarnings(\"" + a + "\") int " + b + " = 0;";
    }
  }

  std::string method(int statements) {
    std::string s = uniform(0, 3) == 0 ? "@Override\n" : "";
    s += "public int " + name() + "Of(int " + name() + ", String " + name() + ") {\n";
    for (int i = 0; i < statements; ++i) s += "  " + statement() + "\n";
    return s + "}\n";
  }

  // A method lexed and cut to exactly n tokens; cutting may unbalance it.
  Snippet snippet(std::size_t n, std::string id = {}) {
    std::string src = method(1);
    while (lex_tokens(src).size() < n) src = method(static_cast<int>(n / 6) + uniform(1, 4));
    Snippet s = lex(src, std::move(id));
    s.tokens.resize(n);
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

// Records for every token of `snippets` with scores on a 1/64 grid.
inline std::vector<AttentionRecord> random_dump(const std::vector<Snippet>& snippets,
                                                std::mt19937_64& rng,
                                                ScoreKind kind = ScoreKind::kCls) {
  std::vector<AttentionRecord> out;
  std::uniform_int_distribution<int> grid(0, 320);
  for (const Snippet& s : snippets) {
    const auto cats = classify(s).token_categories(s.size());
    for (const CodeToken& t : s.tokens) {
      out.push_back({s.id, t.index, t.text, cats[static_cast<std::size_t>(t.index)],
                     grid(rng) / 64.0, kind});
    }
  }
  return out;
}

}  // namespace leancode::testing
