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

#include "anonybench/cparse/printer.h"

#include "anonybench/cparse/parser.h"
#include "anonybench/error.h"

namespace anonybench::cparse {

namespace {

std::string Indent(int level) {
  return std::string(static_cast<std::size_t>(level) * 4, ' ');
}

std::string Declarator(const Node& d);
std::string Specifiers(const Node& type_name, int indent);
std::string Statement(const Node& n, int indent);

std::string Join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string Expr(const Node& n) {
  switch (n.kind) {
    case NodeKind::kBinaryOp:
      return Expr(n.child(0)) + " " + n.text + " " + Expr(n.child(1));
    case NodeKind::kAssign:
      return Expr(n.child(0)) + " = " + Expr(n.child(1));
    case NodeKind::kCompoundAssign:
      return Expr(n.child(0)) + " " + n.text + " " + Expr(n.child(1));
    case NodeKind::kUnaryOp: {
      std::string operand = Expr(n.child(0));
      char last = n.text.back();
      bool glue_risk = (last == '+' || last == '-' || last == '&') &&
                       !operand.empty() && operand.front() == last;
      return n.text + (glue_risk ? " " : "") + operand;
    }
    case NodeKind::kPostfixOp:
      return Expr(n.child(0)) + n.text;
    case NodeKind::kConditional:
      return Expr(n.child(0)) + " ? " + Expr(n.child(1)) + " : " +
             Expr(n.child(2));
    case NodeKind::kCall: {
      std::vector<std::string> args;
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        args.push_back(Expr(n.children[i]));
      }
      return Expr(n.child(0)) + "(" + Join(args, ", ") + ")";
    }
    case NodeKind::kIndex:
      return Expr(n.child(0)) + "[" + Expr(n.child(1)) + "]";
    case NodeKind::kMemberDot:
      return Expr(n.child(0)) + "." + n.text;
    case NodeKind::kMemberArrow:
      return Expr(n.child(0)) + "->" + n.text;
    case NodeKind::kCommaExpr:
      return Expr(n.child(0)) + ", " + Expr(n.child(1));
    case NodeKind::kParenExpr:
      return "(" + Expr(n.child(0)) + ")";
    case NodeKind::kIdentifierRef:
    case NodeKind::kLiteral:
      return n.text;
    case NodeKind::kCast:
      return "(" + PrintType(n.child(0), &n.child(1)) + ")" + Expr(n.child(2));
    case NodeKind::kSizeofExpr: {
      const Node& operand = n.child(0);
      return std::string("sizeof") +
             (operand.kind == NodeKind::kParenExpr ? "" : " ") + Expr(operand);
    }
    case NodeKind::kSizeofType:
      return "sizeof(" + PrintType(n.child(0), &n.child(1)) + ")";
    case NodeKind::kInitializerList: {
      std::vector<std::string> elems;
      for (const Node& c : n.children) elems.push_back(Expr(c));
      return "{" + Join(elems, ", ") + "}";
    }
    default:
      throw Error(ErrorKind::kInternal,
                  "cannot print " + std::string(NodeKindName(n.kind)) +
                      " as an expression");
  }
}

std::string Param(const Node& p) {
  if (p.children.empty()) return p.text;
  return PrintType(p.child(0), &p.child(1));
}

std::string Declarator(const Node& d) {
  switch (d.kind) {
    case NodeKind::kDeclName:
      return d.text;
    case NodeKind::kDeclPointer: {
      std::string inner = Declarator(d.child(0));
      if (d.text.empty()) return "*" + inner;
      return "*" + d.text + (inner.empty() ? "" : " " + inner);
    }
    case NodeKind::kDeclArray:
      return Declarator(d.child(0)) + "[" +
             (d.children.size() > 1 ? Expr(d.child(1)) : "") + "]";
    case NodeKind::kDeclFunction: {
      std::vector<std::string> params;
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        params.push_back(Param(d.children[i]));
      }
      return Declarator(d.child(0)) + "(" + Join(params, ", ") + ")";
    }
    case NodeKind::kDeclParen:
      return "(" + Declarator(d.child(0)) + ")";
    default:
      throw Error(ErrorKind::kInternal, "not a declarator: " +
                                            std::string(NodeKindName(d.kind)));
  }
}

std::string Declaration(const Node& decl, int indent);

std::string Specifiers(const Node& type_name, int indent) {
  std::string out = type_name.text;
  if (!type_name.children.empty()) {
    const Node& spec = type_name.child(0);
    if (!out.empty()) out += ' ';
    out += "struct";
    if (!spec.text.empty()) out += " " + spec.text;
    if (!spec.children.empty()) {
      out += " {\n";
      for (const Node& member : spec.child(0).children) {
        out += Indent(indent + 1) + Declaration(member, indent + 1) + "\n";
      }
      out += Indent(indent) + "}";
    }
  }
  return out;
}

std::string InitDeclarator(const Node& init) {
  std::string out = Declarator(init.child(0));
  if (init.children.size() > 1) out += " = " + Expr(init.child(1));
  return out;
}

std::string Declaration(const Node& decl, int indent) {
  std::string out = Specifiers(decl.child(0), indent);
  std::vector<std::string> inits;
  for (std::size_t i = 1; i < decl.children.size(); ++i) {
    inits.push_back(InitDeclarator(decl.children[i]));
  }
  if (!inits.empty()) out += " " + Join(inits, ", ");
  return out + ";";
}

// Body of a control statement, starting right after the header.
std::string Body(const Node& body, int indent) {
  if (body.kind == NodeKind::kCompoundStmt) return " " + Statement(body, indent);
  return "\n" + Indent(indent + 1) + Statement(body, indent + 1);
}

std::string Block(const Node& block, int indent) {
  std::string out = "{\n";
  for (const Node& s : block.children) {
    out += Indent(indent + 1) + Statement(s, indent + 1) + "\n";
  }
  return out + Indent(indent) + "}";
}

std::string ForInit(const Node& init) {
  switch (init.kind) {
    case NodeKind::kEmpty: return ";";
    case NodeKind::kDeclaration: return Declaration(init, 0);
    case NodeKind::kExprStmt: return Expr(init.child(0)) + ";";
    default:
      throw Error(ErrorKind::kInternal, "bad for-init");
  }
}

std::string Statement(const Node& n, int indent) {
  switch (n.kind) {
    case NodeKind::kCompoundStmt:
      return Block(n, indent);
    case NodeKind::kDeclaration:
      return Declaration(n, indent);
    case NodeKind::kExprStmt:
      return Expr(n.child(0)) + ";";
    case NodeKind::kEmptyStmt:
      return ";";
    case NodeKind::kBreak:
      return "break;";
    case NodeKind::kContinue:
      return "continue;";
    case NodeKind::kReturn:
      return n.children.empty() ? "return;" : "return " + Expr(n.child(0)) + ";";
    case NodeKind::kIf: {
      std::string out = "if (" + Expr(n.child(0)) + ")" + Body(n.child(1), indent);
      if (n.children.size() > 2) {
        const Node& else_body = n.child(2).child(0);
        out += n.child(1).kind == NodeKind::kCompoundStmt
                   ? " else"
                   : "\n" + Indent(indent) + "else";
        if (else_body.kind == NodeKind::kIf) {
          out += " " + Statement(else_body, indent);
        } else {
          out += Body(else_body, indent);
        }
      }
      return out;
    }
    case NodeKind::kFor: {
      std::string header = ForInit(n.child(0));
      if (n.child(1).kind != NodeKind::kEmpty) header += " " + Expr(n.child(1));
      header += ";";
      if (n.child(2).kind != NodeKind::kEmpty) header += " " + Expr(n.child(2));
      return "for (" + header + ")" + Body(n.child(3), indent);
    }
    case NodeKind::kWhile:
      return "while (" + Expr(n.child(0)) + ")" + Body(n.child(1), indent);
    case NodeKind::kDo: {
      const Node& body = n.child(0);
      std::string out = "do" + Body(body, indent);
      out += body.kind == NodeKind::kCompoundStmt ? " " : "\n" + Indent(indent);
      return out + "while (" + Expr(n.child(1)) + ");";
    }
    case NodeKind::kSwitch: {
      std::string out = "switch (" + Expr(n.child(0)) + ") {\n";
      for (const Node& label : n.child(1).children) {
        std::size_t first_stmt = 0;
        if (label.kind == NodeKind::kCase) {
          out += Indent(indent + 1) + "case " + Expr(label.child(0)) + ":\n";
          first_stmt = 1;
        } else {
          out += Indent(indent + 1) + "default:\n";
        }
        for (std::size_t i = first_stmt; i < label.children.size(); ++i) {
          out += Indent(indent + 2) + Statement(label.children[i], indent + 2) +
                 "\n";
        }
      }
      return out + Indent(indent) + "}";
    }
    default:
      throw Error(ErrorKind::kInternal,
                  "cannot print " + std::string(NodeKindName(n.kind)) +
                      " as a statement");
  }
}

std::string TopLevel(const Node& item) {
  switch (item.kind) {
    case NodeKind::kInclude:
      return "#include " + item.text + "\n";
    case NodeKind::kDeclaration:
      return Declaration(item, 0) + "\n";
    case NodeKind::kFunctionDef:
      return Specifiers(item.child(0), 0) + " " + Declarator(item.child(1)) +
             " " + Block(item.child(2), 0) + "\n";
    default:
      throw Error(ErrorKind::kInternal, "bad top-level item");
  }
}

}  // namespace

std::string PrintType(const Node& type_name, const Node* declarator) {
  std::string spec = Specifiers(type_name, 0);
  std::string d = declarator ? Declarator(*declarator) : "";
  return d.empty() ? spec : spec + " " + d;
}

std::string PrintExpression(const Node& expr) { return Expr(expr); }

std::string PrintStatement(const Node& stmt, int indent) {
  return Statement(stmt, indent);
}

std::string Print(const Ast& ast) {
  std::string out;
  const Node* prev = nullptr;
  for (const Node& item : ast.root.children) {
    if (prev != nullptr &&
        (prev->kind == NodeKind::kFunctionDef ||
         item.kind == NodeKind::kFunctionDef ||
         (prev->kind == NodeKind::kInclude) != (item.kind == NodeKind::kInclude))) {
      out += "\n";
    }
    out += TopLevel(item);
    prev = &item;
  }
  return out;
}

std::string Canonicalize(const std::string& source) {
  return Print(ParseSource(source));
}

}  // namespace anonybench::cparse
