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

#include "normalize/tree_util.h"

#include <map>
#include <sstream>

namespace anonybench::normalize::internal {

int BinaryPrecedence(const std::string& op) {
  static const std::map<std::string, int> k = {
      {"||", 4}, {"&&", 5}, {"|", 6},  {"^", 7},  {"&", 8},
      {"==", 9}, {"!=", 9}, {"<", 10}, {">", 10}, {"<=", 10},
      {">=", 10}, {"<<", 11}, {">>", 11}, {"+", 12}, {"-", 12},
      {"*", 13}, {"/", 13}, {"%", 13}};
  return k.at(op);
}

int Precedence(const Node& e) {
  switch (e.kind) {
    case NodeKind::kIdentifierRef:
    case NodeKind::kLiteral:
    case NodeKind::kParenExpr:
      return 17;
    case NodeKind::kCall:
    case NodeKind::kIndex:
    case NodeKind::kMemberDot:
    case NodeKind::kMemberArrow:
    case NodeKind::kPostfixOp:
      return 16;
    case NodeKind::kUnaryOp:
    case NodeKind::kCast:
    case NodeKind::kSizeofExpr:
    case NodeKind::kSizeofType:
      return 15;
    case NodeKind::kBinaryOp:
      return BinaryPrecedence(e.text);
    case NodeKind::kConditional:
      return 3;
    case NodeKind::kAssign:
    case NodeKind::kCompoundAssign:
      return 2;
    case NodeKind::kCommaExpr:
      return 1;
    default:
      return 17;
  }
}

int RequiredPrecedence(const Node& parent, std::size_t index) {
  switch (parent.kind) {
    case NodeKind::kBinaryOp: {
      int p = BinaryPrecedence(parent.text);
      return index == 0 ? p : p + 1;
    }
    case NodeKind::kUnaryOp:
    case NodeKind::kSizeofExpr:
      return 15;
    case NodeKind::kCast:
      return index == 2 ? 15 : 0;
    case NodeKind::kCall:
      return index == 0 ? 16 : 2;
    case NodeKind::kIndex:
      return index == 0 ? 16 : 1;
    case NodeKind::kMemberDot:
    case NodeKind::kMemberArrow:
    case NodeKind::kPostfixOp:
      return 16;
    case NodeKind::kConditional:
      return index == 0 ? 4 : index == 1 ? 1 : 3;
    case NodeKind::kAssign:
    case NodeKind::kCompoundAssign:
      return index == 0 ? 15 : 2;
    case NodeKind::kCommaExpr:
      return index == 0 ? 1 : 2;
    case NodeKind::kInitDeclarator:
    case NodeKind::kInitializerList:
      return 2;
    case NodeKind::kCase:
      return 3;
    case NodeKind::kDeclArray:
      return 3;
    default:
      return 1;
  }
}

Node ParenthesizeFor(Node expr, int required) {
  if (Precedence(expr) >= required) return expr;
  return Node(NodeKind::kParenExpr, "", {std::move(expr)});
}

bool HasSideEffects(const Node& e) {
  switch (e.kind) {
    case NodeKind::kCall:
    case NodeKind::kAssign:
    case NodeKind::kCompoundAssign:
    case NodeKind::kPostfixOp:
      return true;
    case NodeKind::kUnaryOp:
      if (e.text == "++" || e.text == "--") return true;
      break;
    case NodeKind::kSizeofExpr:
    case NodeKind::kSizeofType:
      return false;  // operand is not evaluated
    default:
      break;
  }
  for (const Node& c : e.children) {
    if (HasSideEffects(c)) return true;
  }
  return false;
}

Node Ident(std::string name) {
  return Node(NodeKind::kIdentifierRef, std::move(name));
}

Node Literal(std::string spelling) {
  return Node(NodeKind::kLiteral, std::move(spelling));
}

Node MakeBinary(const std::string& op, Node lhs, Node rhs) {
  int p = BinaryPrecedence(op);
  std::vector<Node> kids;
  kids.push_back(ParenthesizeFor(std::move(lhs), p));
  kids.push_back(ParenthesizeFor(std::move(rhs), p + 1));
  return Node(NodeKind::kBinaryOp, op, std::move(kids));
}

Node MakeCompound(std::vector<Node> stmts) {
  return Node(NodeKind::kCompoundStmt, "", std::move(stmts));
}

Node MakeExprStmt(Node expr) {
  std::vector<Node> kids;
  kids.push_back(std::move(expr));
  return Node(NodeKind::kExprStmt, "", std::move(kids));
}

Node AsBlock(Node stmt) {
  if (stmt.kind == NodeKind::kCompoundStmt) return stmt;
  std::vector<Node> kids;
  kids.push_back(std::move(stmt));
  return MakeCompound(std::move(kids));
}

std::vector<std::string> Words(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::set<std::string> CollectNames(const Node& root) {
  std::set<std::string> names;
  cparse::Visit(root, [&](const Node& n, int) {
    switch (n.kind) {
      case NodeKind::kIdentifierRef:
      case NodeKind::kDeclName:
      case NodeKind::kMemberDot:
      case NodeKind::kMemberArrow:
      case NodeKind::kStructSpec:
        if (!n.text.empty()) names.insert(n.text);
        break;
      case NodeKind::kTypeName:
        for (auto& w : Words(n.text)) names.insert(w);
        break;
      default:
        break;
    }
  });
  return names;
}

const Node* InnermostFunctionDeclarator(const Node& d) {
  const Node* found = nullptr;
  const Node* cur = &d;
  while (cur->kind != NodeKind::kDeclName) {
    if (cur->kind == NodeKind::kDeclFunction) found = cur;
    cur = &cur->children.front();
  }
  return found;
}

Node* InnermostFunctionDeclarator(Node& d) {
  return const_cast<Node*>(
      InnermostFunctionDeclarator(static_cast<const Node&>(d)));
}

}  // namespace anonybench::normalize::internal
