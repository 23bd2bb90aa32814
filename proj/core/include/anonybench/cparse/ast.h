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

#ifndef ANONYBENCH_CPARSE_AST_H_
#define ANONYBENCH_CPARSE_AST_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anonybench/cparse/source_span.h"

namespace anonybench::cparse {

// Child layout per kind ("?" = optional, "*" = repeated):
//
//   TranslationUnit  [Include | FunctionDef | Declaration]*
//   Include          text = "<stdio.h>" or "\"local.h\""
//   FunctionDef      [TypeName, declarator, CompoundStmt]
//   Declaration      [TypeName, InitDeclarator*]
//   InitDeclarator   [declarator, (expr | InitializerList)?]
//   TypeName         text = specifier words in source order; [StructSpec?]
//   StructSpec       text = tag (may be empty); [StructBody?]
//   StructBody       [Declaration*]
//   DeclName         text = declared name, empty for abstract declarators
//   DeclPointer      text = qualifiers ("", "const"); [declarator]
//   DeclArray        [declarator, size-expr?]
//   DeclFunction     [declarator, Param*]
//   DeclParen        [declarator]
//   Param            [TypeName, declarator], or no children with text "..."
//   InitializerList  [(expr | InitializerList)*]
//   CompoundStmt     [stmt*]
//   If               [cond, then-stmt, Else?]
//   Else             [stmt]
//   For              [init (Declaration | ExprStmt | Empty), cond | Empty,
//                     step | Empty, body]
//   While            [cond, body]
//   Do               [body, cond]
//   Switch           [cond, CompoundStmt of Case/Default]
//   Case             [value, stmt*]
//   Default          [stmt*]
//   Return           [expr?]
//   ExprStmt         [expr]
//   BinaryOp         text = operator; [lhs, rhs]
//   UnaryOp          text = prefix operator; [operand]
//   PostfixOp        text = "++" | "--"; [operand]
//   Assign           [lhs, rhs]
//   CompoundAssign   text = "+=" etc.; [lhs, rhs]
//   Conditional      [cond, then, else]
//   Call             [callee, arg*]
//   Index            [base, subscript]
//   MemberDot        text = member; [base]
//   MemberArrow      text = member; [base]
//   CommaExpr        [lhs, rhs]
//   ParenExpr        [expr]
//   IdentifierRef    text = name
//   Literal          text = spelling (adjacent string pieces joined by ' ')
//   Cast             [TypeName, declarator, operand]
//   SizeofExpr       [operand]
//   SizeofType       [TypeName, declarator]
enum class NodeKind {
  kTranslationUnit,
  kInclude,
  kFunctionDef,
  kDeclaration,
  kInitDeclarator,
  kTypeName,
  kStructSpec,
  kStructBody,
  kDeclName,
  kDeclPointer,
  kDeclArray,
  kDeclFunction,
  kDeclParen,
  kParam,
  kInitializerList,
  kCompoundStmt,
  kIf,
  kElse,
  kFor,
  kWhile,
  kDo,
  kSwitch,
  kCase,
  kDefault,
  kBreak,
  kContinue,
  kReturn,
  kExprStmt,
  kEmptyStmt,
  kEmpty,
  kBinaryOp,
  kUnaryOp,
  kPostfixOp,
  kAssign,
  kCompoundAssign,
  kConditional,
  kCall,
  kIndex,
  kMemberDot,
  kMemberArrow,
  kCommaExpr,
  kParenExpr,
  kIdentifierRef,
  kLiteral,
  kCast,
  kSizeofExpr,
  kSizeofType,
};

inline constexpr std::size_t kNodeKindCount =
    static_cast<std::size_t>(NodeKind::kSizeofType) + 1;

std::string_view NodeKindName(NodeKind kind);

struct Node {
  NodeKind kind = NodeKind::kEmpty;
  std::string text;
  std::vector<Node> children;
  SourceSpan span;

  Node() = default;
  explicit Node(NodeKind k, std::string t = {}, std::vector<Node> c = {})
      : kind(k), text(std::move(t)), children(std::move(c)) {}

  Node& child(std::size_t i) { return children.at(i); }
  const Node& child(std::size_t i) const { return children.at(i); }
};

struct Ast {
  Node root;
};

// Span-erased equality: kinds, texts and child order.
bool StructurallyEqual(const Node& a, const Node& b);
inline bool StructurallyEqual(const Ast& a, const Ast& b) {
  return StructurallyEqual(a.root, b.root);
}

bool IsExpression(NodeKind kind);
bool IsStatement(NodeKind kind);
bool IsDeclarator(NodeKind kind);

// Pre-order traversal; the callback receives each node with its depth
// (root = 0).
void Visit(const Node& root,
           const std::function<void(const Node&, int depth)>& fn);

// Post-order mutable traversal.
void Rewrite(Node& root, const std::function<void(Node&)>& fn);

// Name declared by a declarator chain, "" for abstract declarators.
std::string DeclaredName(const Node& declarator);
// The DeclName leaf at the bottom of a declarator chain.
Node& DeclaredNameNode(Node& declarator);
const Node& DeclaredNameNode(const Node& declarator);

// Debug rendering, one node per line.
std::string DumpTree(const Node& node);

}  // namespace anonybench::cparse

#endif  // ANONYBENCH_CPARSE_AST_H_
