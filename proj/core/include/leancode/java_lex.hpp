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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leancode {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kOperator,
  kSeparator,
  kStringLiteral,
  kCharLiteral,
  kNumberLiteral,
  kBoolNullLiteral,
  kAnnotationAt,
};

std::string_view token_kind_name(TokenKind kind);
std::optional<TokenKind> parse_token_kind(std::string_view name);

struct CodeToken {
  std::string text;  // exact source slice
  TokenKind kind = TokenKind::kIdentifier;
  int index = 0;  // 0-based ordinal within the snippet
  int line = 1;   // 1-based
  int col = 1;    // 1-based, in bytes
  std::size_t offset = 0;  // byte offset of text in the source

  bool is(std::string_view t) const { return text == t; }
  bool is_symbol() const {
    return kind == TokenKind::kOperator || kind == TokenKind::kSeparator;
  }
};

struct Snippet {
  std::string id;
  std::vector<CodeToken> tokens;
  std::string source;

  std::size_t size() const { return tokens.size(); }
};

/// True for the Java reserved words (contextual keywords such as `var` or
/// `record` are identifiers; `true`/`false`/`null` are literals).
bool is_java_keyword(std::string_view word);

/// Lexes Java source into code tokens. Comments and whitespace are dropped,
/// operators are read by maximal munch, and string, text-block and char
/// literals become single tokens including their quotes. Bytes that start no
/// Java token become single-byte Operator tokens.
///
/// Throws LexError for an unclosed string, char or block comment.
std::vector<CodeToken> lex_tokens(std::string_view source);

Snippet lex(std::string_view source, std::string id = {});

/// Joins token texts with single spaces. Throws Error(kEmptySnippet) for an
/// empty token list.
std::string detokenize(std::span<const CodeToken> tokens);
inline std::string detokenize(const Snippet& snippet) {
  return detokenize(std::span<const CodeToken>(snippet.tokens));
}

}  // namespace leancode
