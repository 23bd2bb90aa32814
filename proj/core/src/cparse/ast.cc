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

#include "anonybench/cparse/ast.h"

#include "anonybench/error.h"

namespace anonybench::cparse {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kTranslationUnit: return "translation-unit";
    case NodeKind::kInclude: return "include";
    case NodeKind::kFunctionDef: return "function-def";
    case NodeKind::kDeclaration: return "declaration";
    case NodeKind::kInitDeclarator: return "init-declarator";
    case NodeKind::kTypeName: return "type-name";
    case NodeKind::kStructSpec: return "struct-spec";
    case NodeKind::kStructBody: return "struct-body";
    case NodeKind::kDeclName: return "decl-name";
    case NodeKind::kDeclPointer: return "decl-pointer";
    case NodeKind::kDeclArray: return "decl-array";
    case NodeKind::kDeclFunction: return "decl-function";
    case NodeKind::kDeclParen: return "decl-paren";
    case NodeKind::kParam: return "param";
    case NodeKind::kInitializerList: return "initializer-list";
    case NodeKind::kCompoundStmt: return "compound-stmt";
    case NodeKind::kIf: return "if";
    case NodeKind::kElse: return "else";
    case NodeKind::kFor: return "for";
    case NodeKind::kWhile: return "while";
    case NodeKind::kDo: return "do";
    case NodeKind::kSwitch: return "switch";
    case NodeKind::kCase: return "case";
    case NodeKind::kDefault: return "default";
    case NodeKind::kBreak: return "break";
    case NodeKind::kContinue: return "continue";
    case NodeKind::kReturn: return "return";
    case NodeKind::kExprStmt: return "expr-stmt";
    case NodeKind::kEmptyStmt: return "empty-stmt";
    case NodeKind::kEmpty: return "empty";
    case NodeKind::kBinaryOp: return "binary-op";
    case NodeKind::kUnaryOp: return "unary-op";
    case NodeKind::kPostfixOp: return "postfix-op";
    case NodeKind::kAssign: return "assign";
    case NodeKind::kCompoundAssign: return "compound-assign";
    case NodeKind::kConditional: return "conditional";
    case NodeKind::kCall: return "call";
    case NodeKind::kIndex: return "index";
    case NodeKind::kMemberDot: return "member-dot";
    case NodeKind::kMemberArrow: return "member-arrow";
    case NodeKind::kCommaExpr: return "comma-expr";
    case NodeKind::kParenExpr: return "paren-expr";
    case NodeKind::kIdentifierRef: return "identifier-ref";
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kCast: return "cast";
    case NodeKind::kSizeofExpr: return "sizeof-expr";
    case NodeKind::kSizeofType: return "sizeof-type";
  }
  return "?";
}

bool StructurallyEqual(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool IsExpression(NodeKind kind) {
  switch (kind) {
    case NodeKind::kBinaryOp:
    case NodeKind::kUnaryOp:
    case NodeKind::kPostfixOp:
    case NodeKind::kAssign:
    case NodeKind::kCompoundAssign:
    case NodeKind::kConditional:
    case NodeKind::kCall:
    case NodeKind::kIndex:
    case NodeKind::kMemberDot:
    case NodeKind::kMemberArrow:
    case NodeKind::kCommaExpr:
    case NodeKind::kParenExpr:
    case NodeKind::kIdentifierRef:
    case NodeKind::kLiteral:
    case NodeKind::kCast:
    case NodeKind::kSizeofExpr:
    case NodeKind::kSizeofType:
      return true;
    default:
      return false;
  }
}

bool IsStatement(NodeKind kind) {
  switch (kind) {
    case NodeKind::kDeclaration:
    case NodeKind::kCompoundStmt:
    case NodeKind::kIf:
    case NodeKind::kFor:
    case NodeKind::kWhile:
    case NodeKind::kDo:
    case NodeKind::kSwitch:
    case NodeKind::kBreak:
    case NodeKind::kContinue:
    case NodeKind::kReturn:
    case NodeKind::kExprStmt:
    case NodeKind::kEmptyStmt:
      return true;
    default:
      return false;
  }
}

bool IsDeclarator(NodeKind kind) {
  return kind == NodeKind::kDeclName || kind == NodeKind::kDeclPointer ||
         kind == NodeKind::kDeclArray || kind == NodeKind::kDeclFunction ||
         kind == NodeKind::kDeclParen;
}

namespace {

void VisitImpl(const Node& node, int depth,
               const std::function<void(const Node&, int)>& fn) {
  fn(node, depth);
  for (const Node& c : node.children) VisitImpl(c, depth + 1, fn);
}

}  // namespace

void Visit(const Node& root, const std::function<void(const Node&, int)>& fn) {
  VisitImpl(root, 0, fn);
}

void Rewrite(Node& root, const std::function<void(Node&)>& fn) {
  for (Node& c : root.children) Rewrite(c, fn);
  fn(root);
}

const Node& DeclaredNameNode(const Node& declarator) {
  const Node* n = &declarator;
  while (n->kind != NodeKind::kDeclName) {
    if (!IsDeclarator(n->kind) || n->children.empty()) {
      throw Error(ErrorKind::kInternal, "malformed declarator chain");
    }
    n = &n->children.front();
  }
  return *n;
}

Node& DeclaredNameNode(Node& declarator) {
  return const_cast<Node&>(
      DeclaredNameNode(static_cast<const Node&>(declarator)));
}

std::string DeclaredName(const Node& declarator) {
  return DeclaredNameNode(declarator).text;
}

std::string DumpTree(const Node& node) {
  std::string out;
  Visit(node, [&](const Node& n, int depth) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += NodeKindName(n.kind);
    if (!n.text.empty()) out += " '" + n.text + "'";
    out += '\n';
  });
  return out;
}

}  // namespace anonybench::cparse
