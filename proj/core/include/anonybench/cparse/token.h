// Copyright 2026 The Anonybench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANONYBENCH_CPARSE_TOKEN_H_
#define ANONYBENCH_CPARSE_TOKEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "anonybench/cparse/source_span.h"

namespace anonybench::cparse {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kIntLiteral,
  kFloatLiteral,
  kStringLiteral,
  kCharLiteral,
  kPunctuator,
  kIncludeDirective,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

// C99 keyword table (the subset parser rejects some of them later).
bool IsKeyword(std::string_view word);
const std::vector<std::string>& Keywords();

}  // namespace anonybench::cparse

#endif  // ANONYBENCH_CPARSE_TOKEN_H_
