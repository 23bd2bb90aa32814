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

// Small helpers shared by the tree rewrites.

#ifndef ANONYBENCH_SRC_NORMALIZE_TREE_UTIL_H_
#define ANONYBENCH_SRC_NORMALIZE_TREE_UTIL_H_

#include <set>
#include <string>

#include "anonybench/cparse/ast.h"

namespace anonybench::normalize::internal {

using cparse::Node;
using cparse::NodeKind;

// Binding strength of an expression node; larger binds tighter.
//   17 primary, 16 postfix, 15 unary/cast, 13..4 binary, 3 conditional,
//   2 assignment, 1 comma.
int Precedence(const Node& expr);
int BinaryPrecedence(const std::string& op);

// Minimum precedence a child must have to appear unparenthesized at
// position `index` of `parent`. Returns 0 when any expression fits.
int RequiredPrecedence(const Node& parent, std::size_t index);

// Wraps `expr` in a ParenExpr when its precedence is below `required`.
Node ParenthesizeFor(Node expr, int required);

// True when evaluating `expr` may write state or call a function.
bool HasSideEffects(const Node& expr);

Node Ident(std::string name);
Node Literal(std::string spelling);
Node MakeBinary(const std::string& op, Node lhs, Node rhs);
Node MakeCompound(std::vector<Node> stmts);
Node MakeExprStmt(Node expr);

// Wraps a statement in a CompoundStmt unless it already is one.
Node AsBlock(Node stmt);

// Every identifier-like text in the tree: identifier refs, declared names,
// type-name words, members and struct tags.
std::set<std::string> CollectNames(const Node& root);

// The DeclFunction nearest the declared name, or nullptr.
Node* InnermostFunctionDeclarator(Node& declarator);
const Node* InnermostFunctionDeclarator(const Node& declarator);

// Specifier words of a TypeName split on spaces.
std::vector<std::string> Words(const std::string& text);
std::string JoinWords(const std::vector<std::string>& words);

}  // namespace anonybench::normalize::internal

#endif  // ANONYBENCH_SRC_NORMALIZE_TREE_UTIL_H_
