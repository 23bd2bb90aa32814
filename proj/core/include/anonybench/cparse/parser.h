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

#ifndef ANONYBENCH_CPARSE_PARSER_H_
#define ANONYBENCH_CPARSE_PARSER_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "anonybench/cparse/ast.h"
#include "anonybench/cparse/token.h"

namespace anonybench::cparse {

// Typedef names the parser treats as types without seeing their declaration
// (they come from standard headers, which are never parsed).
const std::set<std::string>& StandardTypedefNames();

// Parses the supported C subset: includes, functions, prototypes, globals,
// plain structs, declarations with initializers, the usual statements and
// the full C expression grammar. goto, labels, unions, enums, bitfields and
// compound literals are rejected with Error(kParse) carrying the line.
Ast Parse(const std::vector<Token>& tokens);

// Lex followed by Parse.
Ast ParseSource(std::string_view source);

}  // namespace anonybench::cparse

#endif  // ANONYBENCH_CPARSE_PARSER_H_
