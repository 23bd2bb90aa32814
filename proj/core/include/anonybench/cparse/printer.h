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

#ifndef ANONYBENCH_CPARSE_PRINTER_H_
#define ANONYBENCH_CPARSE_PRINTER_H_

#include <string>

#include "anonybench/cparse/ast.h"

namespace anonybench::cparse {

// Deterministic canonical layout: 4-space indent, one statement per line,
// opening brace on the same line, single spaces around binary operators.
// Parentheses are printed only where the tree holds a ParenExpr.
std::string Print(const Ast& ast);

std::string PrintExpression(const Node& expr);
std::string PrintStatement(const Node& stmt, int indent = 0);
// `type_name` followed by an optional (possibly abstract) declarator.
std::string PrintType(const Node& type_name, const Node* declarator);

// Lex, parse and print.
std::string Canonicalize(const std::string& source);

}  // namespace anonybench::cparse

#endif  // ANONYBENCH_CPARSE_PRINTER_H_
