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

#include "leancode/java_lex.hpp"

#include <algorithm>
#include <array>

#include "leancode/error.hpp"

namespace leancode {

namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract",   "assert",       "boolean",   "break",      "byte",
    "case",       "catch",        "char",      "class",      "const",
    "continue",   "default",      "do",        "double",     "else",
    "enum",       "extends",      "final",     "finally",    "float",
    "for",        "goto",         "if",        "implements", "import",
    "instanceof", "int",          "interface", "long",       "native",
    "new",        "package",      "private",   "protected",  "public",
    "return",     "short",        "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",      "throw",      "throws",
    "transient",  "try",          "void",      "volatile",   "while",
};

// Longest first so the first prefix match is the maximal munch.
constexpr std::array<std::string_view, 25> kMultiCharOperators = {
    ">>>=", "<<=", ">>=", ">>>", "->", "==", ">=", "<=", "!=",
    "&&",   "||",  "++",  "--",  "+=", "-=", "*=", "/=", "&=",
    "|=",   "^=",  "%=",  "<<",  ">>", "::", "...",
};

constexpr std::string_view kSingleOperators = "=><!~?:+-*/&|^%";
constexpr std::string_view kSingleSeparators = "(){}[];,.";

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_hex_digit(unsigned char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
// Non-ASCII bytes are treated as identifier parts so UTF-8 identifiers lex
// as one token.
bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}
bool is_ident_part(unsigned char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<CodeToken> run() {
    std::vector<CodeToken> out;
    while (pos_ < src_.size()) {
      const unsigned char c = at(pos_);
      if (is_space(c)) {
        advance(1);
        continue;
      }
      if (c == '/' && at(pos_ + 1) == '/') {
        while (pos_ < src_.size() && at(pos_) != '\n' && at(pos_) != '\r') {
          advance(1);
        }
        continue;
      }
      if (c == '/' && at(pos_ + 1) == '*') {
        skip_block_comment();
        continue;
      }
      const std::size_t start = pos_;
      const int line = line_;
      const int col = col_;
      const TokenKind kind = scan_token();
      CodeToken tok;
      tok.text = std::string(src_.substr(start, pos_ - start));
      tok.kind = kind;
      tok.index = static_cast<int>(out.size());
      tok.line = line;
      tok.col = col;
      tok.offset = start;
      if (kind == TokenKind::kIdentifier) {
        if (is_java_keyword(tok.text)) {
          tok.kind = TokenKind::kKeyword;
        } else if (tok.text == "true" || tok.text == "false" ||
                   tok.text == "null") {
          tok.kind = TokenKind::kBoolNullLiteral;
        }
      }
      out.push_back(std::move(tok));
    }
    return out;
  }

 private:
  unsigned char at(std::size_t i) const {
    return i < src_.size() ? static_cast<unsigned char>(src_[i]) : '\0';
  }
  bool has(std::size_t i) const { return i < src_.size(); }

  // Moves forward n bytes keeping line/col current; "\r\n" counts once.
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      const unsigned char c = at(pos_);
      ++pos_;
      if (c == '\n' || (c == '\r' && at(pos_) != '\n')) {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_block_comment() {
    const int line = line_;
    const int col = col_;
    advance(2);
    while (pos_ < src_.size()) {
      if (at(pos_) == '*' && at(pos_ + 1) == '/') {
        advance(2);
        return;
      }
      advance(1);
    }
    throw LexError("unterminated block comment", line, col);
  }

  TokenKind scan_token() {
    const unsigned char c = at(pos_);
    if (c == '"') return scan_string();
    if (c == '\'') return scan_char();
    if (is_digit(c) || (c == '.' && is_digit(at(pos_ + 1)))) {
      scan_number();
      return TokenKind::kNumberLiteral;
    }
    if (is_ident_start(c)) {
      while (has(pos_) && is_ident_part(at(pos_))) advance(1);
      return TokenKind::kIdentifier;
    }
    if (c == '@') {
      advance(1);
      return TokenKind::kAnnotationAt;
    }
    const std::string_view rest = src_.substr(pos_);
    for (std::string_view op : kMultiCharOperators) {
      if (rest.starts_with(op)) {
        advance(op.size());
        return (op == "::" || op == "...") ? TokenKind::kSeparator
                                           : TokenKind::kOperator;
      }
    }
    advance(1);
    if (kSingleSeparators.find(static_cast<char>(c)) != std::string_view::npos) {
      return TokenKind::kSeparator;
    }
    // Known single-char operators and any unrecognised byte.
    return TokenKind::kOperator;
  }

  TokenKind scan_string() {
    const int line = line_;
    const int col = col_;
    if (src_.substr(pos_).starts_with("\"\"\"")) {
      advance(3);
      while (pos_ < src_.size()) {
        if (at(pos_) == '\\') {
          advance(2);
        } else if (src_.substr(pos_).starts_with("\"\"\"")) {
          advance(3);
          return TokenKind::kStringLiteral;
        } else {
          advance(1);
        }
      }
      throw LexError("unterminated text block", line, col);
    }
    scan_quoted('"', line, col, "unterminated string literal");
    return TokenKind::kStringLiteral;
  }

  TokenKind scan_char() {
    scan_quoted('\'', line_, col_, "unterminated char literal");
    return TokenKind::kCharLiteral;
  }

  void scan_quoted(char quote, int line, int col, const char* what) {
    advance(1);
    while (pos_ < src_.size()) {
      const unsigned char c = at(pos_);
      if (c == '\n' || c == '\r') break;
      if (c == '\\') {
        if (at(pos_ + 1) == '\n' || at(pos_ + 1) == '\r' || !has(pos_ + 1)) {
          break;
        }
        advance(2);
        continue;
      }
      advance(1);
      if (c == static_cast<unsigned char>(quote)) return;
    }
    throw LexError(what, line, col);
  }

  void scan_number() {
    auto digits = [&](auto pred) {
      while (has(pos_) && (pred(at(pos_)) || at(pos_) == '_')) advance(1);
    };
    const unsigned char c0 = at(pos_);
    const unsigned char c1 = at(pos_ + 1);
    if (c0 == '0' && (c1 == 'x' || c1 == 'X')) {
      advance(2);
      digits(is_hex_digit);
      if (at(pos_) == '.') {
        advance(1);
        digits(is_hex_digit);
      }
      if (at(pos_) == 'p' || at(pos_) == 'P') exponent();
    } else if (c0 == '0' && (c1 == 'b' || c1 == 'B')) {
      advance(2);
      digits([](unsigned char c) { return c == '0' || c == '1'; });
    } else {
      digits(is_digit);
      // "1." is a literal; "1..2" and "1.x" (member access) are not.
      if (at(pos_) == '.' && at(pos_ + 1) != '.' &&
          (!is_ident_start(at(pos_ + 1)) || is_exponent_or_suffix(at(pos_ + 1)))) {
        advance(1);
        digits(is_digit);
      }
      if (at(pos_) == 'e' || at(pos_) == 'E') exponent();
    }
    const unsigned char s = at(pos_);
    if (s == 'l' || s == 'L' || s == 'f' || s == 'F' || s == 'd' || s == 'D') {
      advance(1);
    }
  }

  static bool is_exponent_or_suffix(unsigned char c) {
    return c == 'e' || c == 'E' || c == 'f' || c == 'F' || c == 'd' || c == 'D';
  }

  void exponent() {
    const unsigned char sign = at(pos_ + 1);
    const std::size_t digit_at = (sign == '+' || sign == '-') ? pos_ + 2 : pos_ + 1;
    if (!is_digit(at(digit_at))) return;
    advance(digit_at - pos_);
    while (has(pos_) && (is_digit(at(pos_)) || at(pos_) == '_')) advance(1);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "Identifier";
    case TokenKind::kKeyword: return "Keyword";
    case TokenKind::kOperator: return "Operator";
    case TokenKind::kSeparator: return "Separator";
    case TokenKind::kStringLiteral: return "StringLiteral";
    case TokenKind::kCharLiteral: return "CharLiteral";
    case TokenKind::kNumberLiteral: return "NumberLiteral";
    case TokenKind::kBoolNullLiteral: return "BoolNullLiteral";
    case TokenKind::kAnnotationAt: return "AnnotationAt";
  }
  return "Identifier";
}

std::optional<TokenKind> parse_token_kind(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(TokenKind::kAnnotationAt); ++k) {
    const auto kind = static_cast<TokenKind>(k);
    if (token_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<CodeToken> lex_tokens(std::string_view source) {
  return Lexer(source).run();
}

Snippet lex(std::string_view source, std::string id) {
  Snippet s;
  s.id = std::move(id);
  s.source = std::string(source);
  s.tokens = lex_tokens(source);
  return s;
}

std::string detokenize(std::span<const CodeToken> tokens) {
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptySnippet, "cannot detokenize an empty token list");
  }
  std::size_t total = tokens.size();
  for (const auto& t : tokens) total += t.text.size();
  std::string out;
  out.reserve(total);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i].text;
  }
  return out;
}

}  // namespace leancode
