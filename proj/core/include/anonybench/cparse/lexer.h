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

#ifndef ANONYBENCH_CPARSE_LEXER_H_
#define ANONYBENCH_CPARSE_LEXER_H_

#include <string_view>
#include <vector>

#include "anonybench/cparse/token.h"

namespace anonybench::cparse {

// Tokenizes preprocessed C source. Comments are skipped, `#include` lines
// become a single kIncludeDirective token whose text is the canonical
// `#include <header>` spelling. Any other directive is rejected.
//
// Throws Error(kLex) for unterminated literals/comments and stray characters.
std::vector<Token> Lex(std::string_view source);

}  // namespace anonybench::cparse

#endif  // ANONYBENCH_CPARSE_LEXER_H_
