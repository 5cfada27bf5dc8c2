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

#include "leancode/statements.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace leancode {

namespace {

struct CategoryNames {
  Category category;
  std::string_view wire;
  std::string_view display;
};

constexpr std::array<CategoryNames, kNumCategories> kCategoryNames = {{
    {Category::kAnnotation, "Annotation", "Annotation"},
    {Category::kArithmetic, "Arithmetic", "Arithmetic"},
    {Category::kVariableDeclaration, "VariableDeclaration", "Variable Declaration"},
    {Category::kFunctionInvocation, "FunctionInvocation", "Function Invocation"},
    {Category::kReturn, "Return", "Return"},
    {Category::kSwitch, "Switch", "Switch"},
    {Category::kBreak, "Break", "Break"},
    {Category::kSetter, "Setter", "Setter"},
    {Category::kSynchronized, "Synchronized", "Synchronized"},
    {Category::kTry, "Try", "Try"},
    {Category::kCatch, "Catch", "Catch"},
    {Category::kMethodSignature, "MethodSignature", "Method Signature"},
    {Category::kFinally, "Finally", "Finally"},
    {Category::kGetter, "Getter", "Getter"},
    {Category::kThrow, "Throw", "Throw"},
    {Category::kCase, "Case", "Case"},
    {Category::kWhile, "While", "While"},
    {Category::kContinue, "Continue", "Continue"},
    {Category::kIfCondition, "IfCondition", "If Condition"},
    {Category::kFor, "For", "For"},
    {Category::kLogging, "Logging", "Logging"},
    {Category::kOther, "Other", "Other"},
}};

constexpr std::array<std::string_view, 8> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double"};

constexpr std::array<std::string_view, 11> kModifiers = {
    "final",     "static",    "private",  "protected", "public", "abstract",
    "transient", "volatile",  "strictfp", "native",    "synchronized"};

constexpr std::array<std::string_view, 3> kLoggerNames = {"log", "logger",
                                                          "logging"};

constexpr std::array<std::string_view, 24> kArithmeticOps = {
    "+",   "-",  "*",  "/",  "%",  "<<", ">>", ">>>", "&",   "|",   "^",  "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=", "++", "--"};

template <std::size_t N>
bool one_of(std::string_view s, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool has_accessor_prefix(std::string_view name, std::string_view prefix) {
  return name.size() > prefix.size() && name.starts_with(prefix) &&
         std::isupper(static_cast<unsigned char>(name[prefix.size()]));
}

// One past the end of an annotation starting at `at` (`@` Name (. Name)*
// optionally followed by a balanced argument list), or nullopt if `at` does
// not start an annotation.
std::optional<std::size_t> annotation_end(std::span<const CodeToken> t,
                                          std::size_t at) {
  if (at + 1 >= t.size() || !t[at].is("@") ||
      t[at + 1].kind != TokenKind::kIdentifier) {
    return std::nullopt;
  }
  std::size_t i = at + 2;
  while (i + 1 < t.size() && t[i].is(".") &&
         t[i + 1].kind == TokenKind::kIdentifier) {
    i += 2;
  }
  if (i < t.size() && t[i].is("(")) {
    int depth = 0;
    for (; i < t.size(); ++i) {
      if (t[i].is("(")) ++depth;
      if (t[i].is(")") && --depth == 0) return i + 1;
    }
    return t.size();
  }
  return i;
}

bool looks_like_signature(std::span<const CodeToken> t, std::size_t begin,
                          std::size_t end) {
  if (begin >= end) return false;
  const CodeToken& first = t[begin];
  const bool paren_next = begin + 1 < end && t[begin + 1].is("(");
  if (paren_next && (first.is("if") || first.is("for") || first.is("while") ||
                     first.is("switch") || first.is("catch") ||
                     first.is("synchronized") || first.is("try"))) {
    return false;
  }
  if (first.is("else") || first.is("do") || first.is("try") ||
      first.is("finally") || first.is("return") || first.is("throw") ||
      first.is("new") || first.is("case") || first.is("break") ||
      first.is("continue")) {
    return false;
  }
  if (first.is("default") && begin + 1 < end &&
      (t[begin + 1].is(":") || t[begin + 1].is("->"))) {
    return false;
  }
  bool has_paren = false;
  int depth = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (t[i].is("(")) {
      if (depth == 0) has_paren = true;
      ++depth;
    } else if (t[i].is(")")) {
      --depth;
    } else if (depth == 0 && (t[i].is("=") || t[i].is("->"))) {
      return false;
    }
  }
  return has_paren;
}

Segmentation split_by_line(std::span<const CodeToken> t) {
  Segmentation seg;
  seg.degraded = true;
  std::size_t start = 0;
  bool seeking_signature = true;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    if (i == t.size() || t[i].line != t[start].line) {
      std::size_t body = i;
      if (seeking_signature && t[start].kind != TokenKind::kAnnotationAt) {
        seeking_signature = false;
        if (t[i - 1].is("{")) body = i - 1;
        if (looks_like_signature(t, start, body)) {
          seg.signature = seg.ranges.size();
        } else {
          body = i;
        }
      }
      seg.ranges.push_back({static_cast<int>(start), static_cast<int>(body)});
      if (body != i) seg.ranges.push_back({static_cast<int>(body), static_cast<int>(i)});
      start = i;
    }
  }
  return seg;
}

class Splitter {
 public:
  explicit Splitter(std::span<const CodeToken> t) : t_(t) {}

  Segmentation run() {
    const std::size_t n = t_.size();
    std::size_t i = 0;
    while (i < n) {
      const CodeToken& tok = t_[i];
      if (i == start_ && nest_.empty()) {
        if (auto end = annotation_end(t_, i)) {
          emit(*end, false, true);
          i = *end;
          continue;
        }
      }
      if (tok.is("(") || tok.is("[")) {
        nest_.push_back(tok.text[0]);
      } else if (tok.is(")") || tok.is("]")) {
        const char open = tok.is(")") ? '(' : '[';
        if (nest_.empty() || nest_.back() != open) {
          unbalanced_ = true;
        }
        if (!nest_.empty()) nest_.pop_back();
      } else if (tok.is("?")) {
        if (nest_.empty()) ++ternaries_;
      } else if (tok.is("{")) {
        if (!nest_.empty() || opens_expression(i)) {
          nest_.push_back('e');
        } else {
          open_block(i);
        }
      } else if (tok.is("}")) {
        if (!nest_.empty() && nest_.back() == 'e') {
          nest_.pop_back();
        } else {
          if (!nest_.empty()) unbalanced_ = true;
          nest_.clear();
          if (start_ < i) emit(i);
          emit(i + 1);
          if (--depth_ < 0) unbalanced_ = true;
        }
      } else if (nest_.empty() && tok.is(";")) {
        emit(i + 1);
      } else if (nest_.empty() && tok.is(":") && in_case_label()) {
        if (ternaries_ > 0) {
          --ternaries_;
        } else {
          emit(i + 1);
        }
      }
      ++i;
    }
    if (start_ < n) emit(n);
    if (unbalanced_ || depth_ != 0 || !nest_.empty()) return split_by_line(t_);
    return std::move(seg_);
  }

 private:
  bool opens_expression(std::size_t i) const {
    if (i == 0 || start_ == i) return false;
    const CodeToken& prev = t_[i - 1];
    return prev.is("=") || prev.is("]") || prev.is("->");
  }

  bool in_case_label() const {
    if (start_ >= t_.size()) return false;
    const CodeToken& first = t_[start_];
    return first.is("case") || first.is("default");
  }

  void open_block(std::size_t i) {
    if (start_ == i) {
      emit(i + 1);
    } else if (head_ && looks_like_signature(t_, start_, i)) {
      emit(i, true);
      emit(i + 1);
    } else {
      emit(i + 1);
    }
    ++depth_;
  }

  void emit(std::size_t end, bool signature = false, bool annotation = false) {
    if (end <= start_) return;
    if (signature) seg_.signature = seg_.ranges.size();
    seg_.ranges.push_back({static_cast<int>(start_), static_cast<int>(end)});
    start_ = end;
    ternaries_ = 0;
    if (!annotation) head_ = false;
  }

  std::span<const CodeToken> t_;
  Segmentation seg_;
  std::vector<char> nest_;
  std::size_t start_ = 0;
  int depth_ = 0;
  int ternaries_ = 0;
  bool head_ = true;
  bool unbalanced_ = false;
};

struct Invocation {
  std::string_view method;
  std::string_view receiver;  // empty when unqualified or not a simple name
};

std::vector<Invocation> invocations(std::span<const CodeToken> s) {
  std::vector<Invocation> out;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    if (s[k].kind == TokenKind::kIdentifier && s[k + 1].is("(")) {
      Invocation inv{s[k].text, {}};
      if (k >= 2 && s[k - 1].is(".") && s[k - 2].kind == TokenKind::kIdentifier) {
        inv.receiver = s[k - 2].text;
      }
      out.push_back(inv);
    }
  }
  return out;
}

// Position after a type starting at i (primitive or dotted name, generic
// arguments, array dims), or nullopt.
std::optional<std::size_t> skip_type(std::span<const CodeToken> s, std::size_t i) {
  if (i >= s.size()) return std::nullopt;
  if (s[i].kind == TokenKind::kKeyword) {
    if (!one_of(s[i].text, kPrimitiveTypes)) return std::nullopt;
    ++i;
  } else if (s[i].kind == TokenKind::kIdentifier) {
    ++i;
    while (i + 1 < s.size() && s[i].is(".") &&
           s[i + 1].kind == TokenKind::kIdentifier) {
      i += 2;
    }
    if (i < s.size() && s[i].is("<")) {
      int depth = 0;
      for (; i < s.size(); ++i) {
        const CodeToken& g = s[i];
        if (g.is("<")) {
          ++depth;
        } else if (g.is(">")) {
          depth -= 1;
        } else if (g.is(">>")) {
          depth -= 2;
        } else if (g.is(">>>")) {
          depth -= 3;
        } else if (!(g.kind == TokenKind::kIdentifier || g.is(",") ||
                     g.is("?") || g.is(".") || g.is("[") || g.is("]") ||
                     g.is("&") || g.is("extends") || g.is("super") ||
                     one_of(g.text, kPrimitiveTypes))) {
          return std::nullopt;
        }
        if (depth <= 0) break;
      }
      if (depth != 0 || i >= s.size()) return std::nullopt;
      ++i;
    }
  } else {
    return std::nullopt;
  }
  while (i + 1 < s.size() && s[i].is("[") && s[i + 1].is("]")) i += 2;
  return i;
}

bool is_variable_declaration(std::span<const CodeToken> s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (one_of(s[i].text, kModifiers) && s[i].kind == TokenKind::kKeyword) {
      ++i;
    } else if (auto end = annotation_end(s, i)) {
      i = *end;
    } else {
      break;
    }
  }
  auto after_type = skip_type(s, i);
  if (!after_type) return false;
  i = *after_type;
  if (i + 1 >= s.size() || s[i].kind != TokenKind::kIdentifier) return false;
  const CodeToken& next = s[i + 1];
  return next.is("=") || next.is(";") || next.is(",");
}

std::optional<Category> keyword_category(std::span<const CodeToken> s) {
  const CodeToken& first = s[0];
  if (first.kind != TokenKind::kKeyword) return std::nullopt;
  const std::string_view w = first.text;
  if (w == "return") return Category::kReturn;
  if (w == "throw") return Category::kThrow;
  if (w == "break") return Category::kBreak;
  if (w == "continue") return Category::kContinue;
  if (w == "switch") return Category::kSwitch;
  if (w == "case") return Category::kCase;
  if (w == "default" && s.size() > 1 && (s[1].is(":") || s[1].is("->"))) {
    return Category::kCase;
  }
  if (w == "while" || w == "do") return Category::kWhile;
  if (w == "for") return Category::kFor;
  if (w == "if" || w == "else") return Category::kIfCondition;
  if (w == "try") return Category::kTry;
  if (w == "catch") return Category::kCatch;
  if (w == "finally") return Category::kFinally;
  if (w == "synchronized") return Category::kSynchronized;
  return std::nullopt;
}

}  // namespace

const std::array<Category, kNumScoredCategories>& scored_categories() {
  static const auto cats = [] {
    std::array<Category, kNumScoredCategories> out{};
    for (std::size_t i = 0; i < kNumScoredCategories; ++i) {
      out[i] = static_cast<Category>(i);
    }
    return out;
  }();
  return cats;
}

std::string_view category_name(Category c) {
  return kCategoryNames[category_index(c)].wire;
}

std::string_view category_display_name(Category c) {
  return kCategoryNames[category_index(c)].display;
}

std::optional<Category> parse_category(std::string_view name) {
  for (const auto& entry : kCategoryNames) {
    if (entry.wire == name || entry.display == name) return entry.category;
  }
  return std::nullopt;
}

std::vector<Category> StatementSet::token_categories(std::size_t n_tokens) const {
  std::vector<Category> out(n_tokens, Category::kOther);
  for (const Statement& st : statements) {
    for (int i = st.range.begin; i < st.range.end && i < static_cast<int>(n_tokens); ++i) {
      out[static_cast<std::size_t>(i)] = st.category;
    }
  }
  return out;
}

Segmentation split(std::span<const CodeToken> tokens) {
  return Splitter(tokens).run();
}

Category categorize(std::span<const CodeToken> tokens, StatementRange range,
                    bool is_signature) {
  if (is_signature) return Category::kMethodSignature;
  const auto s = tokens.subspan(static_cast<std::size_t>(range.begin),
                                static_cast<std::size_t>(range.size()));
  if (s.empty()) return Category::kOther;
  if (s[0].kind == TokenKind::kAnnotationAt) return Category::kAnnotation;
  if (auto c = keyword_category(s)) return *c;

  const auto calls = invocations(s);
  for (const Invocation& inv : calls) {
    if (one_of(lower(inv.method), kLoggerNames) ||
        one_of(lower(inv.receiver), kLoggerNames)) {
      return Category::kLogging;
    }
  }
  // Accessor categories follow the outermost call, the first in source order.
  if (!calls.empty()) {
    const std::string_view m = calls.front().method;
    if (has_accessor_prefix(m, "set")) return Category::kSetter;
    if (has_accessor_prefix(m, "get") || has_accessor_prefix(m, "is")) return Category::kGetter;
  }
  if (is_variable_declaration(s)) return Category::kVariableDeclaration;
  if (!calls.empty()) return Category::kFunctionInvocation;
  for (const CodeToken& tok : s) {
    if (tok.kind == TokenKind::kOperator && one_of(tok.text, kArithmeticOps)) {
      return Category::kArithmetic;
    }
  }
  return Category::kOther;
}

StatementSet classify(std::span<const CodeToken> tokens) {
  const Segmentation seg = split(tokens);
  StatementSet out;
  out.degraded = seg.degraded;
  out.statements.reserve(seg.ranges.size());
  for (std::size_t i = 0; i < seg.ranges.size(); ++i) {
    const bool sig = seg.signature && *seg.signature == i;
    out.statements.push_back({seg.ranges[i], categorize(tokens, seg.ranges[i], sig)});
  }
  return out;
}

}  // namespace leancode
