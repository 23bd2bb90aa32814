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

#include "anonybench/cparse/parser.h"

#include <map>
#include <utility>

#include "anonybench/cparse/lexer.h"
#include "anonybench/error.h"

namespace anonybench::cparse {

const std::set<std::string>& StandardTypedefNames() {
  static const std::set<std::string> kNames = {
      "FILE",     "bool",      "clock_t",  "div_t",     "fpos_t",
      "int16_t",  "int32_t",   "int64_t",  "int8_t",    "intmax_t",
      "intptr_t", "jmp_buf",   "ldiv_t",   "lldiv_t",   "ptrdiff_t",
      "sig_atomic_t", "size_t", "ssize_t", "time_t",    "uint16_t",
      "uint32_t", "uint64_t",  "uint8_t",  "uintmax_t", "uintptr_t",
      "va_list",  "wchar_t"};
  return kNames;
}

namespace {

const std::set<std::string_view>& TypeKeywords() {
  static const std::set<std::string_view> k = {
      "void", "char", "short", "int", "long", "float", "double",
      "signed", "unsigned", "_Bool", "_Complex"};
  return k;
}
const std::set<std::string_view>& StorageKeywords() {
  static const std::set<std::string_view> k = {"typedef", "extern", "static",
                                               "auto", "register", "inline"};
  return k;
}
const std::set<std::string_view>& QualifierKeywords() {
  static const std::set<std::string_view> k = {"const", "volatile",
                                               "restrict"};
  return k;
}

const std::map<std::string_view, int>& BinaryPrecedence() {
  static const std::map<std::string_view, int> k = {
      {"||", 4}, {"&&", 5}, {"|", 6},   {"^", 7},   {"&", 8},
      {"==", 9}, {"!=", 9}, {"<", 10},  {">", 10},  {"<=", 10},
      {">=", 10}, {"<<", 11}, {">>", 11}, {"+", 12}, {"-", 12},
      {"*", 13}, {"/", 13}, {"%", 13}};
  return k;
}

bool IsAssignOp(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
         op == "%=" || op == "<<=" || op == ">>=" || op == "&=" ||
         op == "^=" || op == "|=";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    typedefs_.insert(StandardTypedefNames().begin(),
                     StandardTypedefNames().end());
  }

  Ast Run() {
    Node tu(NodeKind::kTranslationUnit);
    while (!AtEnd()) {
      if (Cur().kind == TokenKind::kIncludeDirective) {
        std::size_t first = pos_;
        std::string header = Cur().text.substr(std::string("#include ").size());
        ++pos_;
        Node inc(NodeKind::kInclude, header);
        Finish(inc, first);
        tu.children.push_back(std::move(inc));
        continue;
      }
      tu.children.push_back(ParseExternal());
    }
    if (toks_.empty()) {
      tu.span = {};
    } else {
      tu.span = SourceSpan::Cover(toks_.front().span, toks_.back().span);
    }
    return Ast{std::move(tu)};
  }

 private:
  // ---- token helpers -------------------------------------------------------

  bool AtEnd() const { return pos_ >= toks_.size(); }

  const Token& Cur() const {
    if (AtEnd()) Fail("unexpected end of input");
    return toks_[pos_];
  }

  bool Is(std::string_view text, std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    if (i >= toks_.size()) return false;
    const Token& t = toks_[i];
    return (t.kind == TokenKind::kPunctuator || t.kind == TokenKind::kKeyword) &&
           t.text == text;
  }

  bool IsKind(TokenKind kind, std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() && toks_[i].kind == kind;
  }

  bool Accept(std::string_view text) {
    if (Is(text)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(std::string_view text) {
    if (!Accept(text)) {
      Fail("expected '" + std::string(text) + "'" + Near());
    }
  }

  std::string Near() const {
    if (AtEnd()) return " at end of input";
    return " near '" + toks_[pos_].text + "'";
  }

  [[noreturn]] void Fail(const std::string& what) const {
    int line = 1;
    std::string where;
    if (pos_ < toks_.size()) {
      line = toks_[pos_].span.line_start;
      where = " (" + ToString(toks_[pos_].span) + ")";
    } else if (!toks_.empty()) {
      line = toks_.back().span.line_end;
    }
    throw Error(ErrorKind::kParse,
                what + " at line " + std::to_string(line) + where);
  }

  void Finish(Node& n, std::size_t first_token) const {
    if (first_token >= pos_) {
      n.span = EmptySpanHere();
      return;
    }
    n.span = SourceSpan::Cover(toks_[first_token].span, toks_[pos_ - 1].span);
  }

  // Zero-width span right after the previously consumed token.
  SourceSpan EmptySpanHere() const {
    if (pos_ == 0 || toks_.empty()) return {};
    const SourceSpan& prev = toks_[pos_ - 1].span;
    return {prev.byte_end, prev.byte_end, prev.line_end, prev.line_end};
  }

  Node EmptyNode(NodeKind kind = NodeKind::kEmpty) const {
    Node n(kind);
    n.span = EmptySpanHere();
    return n;
  }

  // ---- declarations --------------------------------------------------------

  bool IsTypedefName(std::size_t ahead = 0) const {
    return IsKind(TokenKind::kIdentifier, ahead) &&
           typedefs_.count(toks_[pos_ + ahead].text) > 0;
  }

  bool StartsTypeName(std::size_t ahead = 0) const {
    if (pos_ + ahead >= toks_.size()) return false;
    const Token& t = toks_[pos_ + ahead];
    if (t.kind == TokenKind::kKeyword) {
      return TypeKeywords().count(t.text) || QualifierKeywords().count(t.text) ||
             t.text == "struct" || t.text == "union" || t.text == "enum";
    }
    return IsTypedefName(ahead);
  }

  bool StartsDeclaration() const {
    if (AtEnd()) return false;
    if (Cur().kind == TokenKind::kKeyword && StorageKeywords().count(Cur().text))
      return true;
    return StartsTypeName();
  }

  // Declaration specifiers. Sets *is_typedef when the storage class is
  // typedef.
  Node ParseSpecifiers(bool allow_storage, bool* is_typedef = nullptr) {
    std::size_t first = pos_;
    Node type(NodeKind::kTypeName);
    std::string words;
    bool has_base = false;
    auto add = [&](const std::string& w) {
      if (!words.empty()) words += ' ';
      words += w;
    };
    while (!AtEnd()) {
      const Token& t = Cur();
      if (t.kind == TokenKind::kKeyword) {
        if (StorageKeywords().count(t.text)) {
          if (!allow_storage) Fail("storage class not allowed here" + Near());
          if (t.text == "typedef" && is_typedef) *is_typedef = true;
          add(t.text);
          ++pos_;
          continue;
        }
        if (QualifierKeywords().count(t.text)) {
          add(t.text);
          ++pos_;
          continue;
        }
        if (TypeKeywords().count(t.text)) {
          if (t.text == "_Complex") Fail("_Complex is not supported");
          add(t.text);
          has_base = true;
          ++pos_;
          continue;
        }
        if (t.text == "struct") {
          if (has_base) Fail("conflicting type specifiers" + Near());
          type.children.push_back(ParseStructSpec());
          has_base = true;
          continue;
        }
        if (t.text == "union" || t.text == "enum") {
          Fail(t.text + " types are not supported");
        }
        break;
      }
      if (!has_base && IsTypedefName()) {
        add(t.text);
        has_base = true;
        ++pos_;
        continue;
      }
      break;
    }
    if (!has_base) Fail("expected a type specifier" + Near());
    type.text = words;
    Finish(type, first);
    return type;
  }

  Node ParseStructSpec() {
    std::size_t first = pos_;
    Expect("struct");
    Node spec(NodeKind::kStructSpec);
    if (IsKind(TokenKind::kIdentifier)) {
      spec.text = Cur().text;
      ++pos_;
    }
    if (Is("{")) {
      std::size_t body_first = pos_;
      ++pos_;
      Node body(NodeKind::kStructBody);
      while (!Is("}")) {
        if (AtEnd()) Fail("unterminated struct body");
        Node decl(NodeKind::kDeclaration);
        std::size_t decl_first = pos_;
        decl.children.push_back(ParseSpecifiers(false));
        do {
          std::size_t d_first = pos_;
          Node init(NodeKind::kInitDeclarator);
          init.children.push_back(ParseDeclarator(false));
          if (Is(":")) Fail("bitfields are not supported");
          Finish(init, d_first);
          decl.children.push_back(std::move(init));
        } while (Accept(","));
        Expect(";");
        Finish(decl, decl_first);
        body.children.push_back(std::move(decl));
      }
      Expect("}");
      Finish(body, body_first);
      spec.children.push_back(std::move(body));
    } else if (spec.text.empty()) {
      Fail("anonymous struct without body");
    }
    Finish(spec, first);
    return spec;
  }

  // declarator := '*' qualifiers* declarator | direct suffix*
  // Abstract declarators are allowed when `abstract` is true.
  Node ParseDeclarator(bool abstract) {
    std::size_t first = pos_;
    if (Accept("*")) {
      Node ptr(NodeKind::kDeclPointer);
      std::string quals;
      while (!AtEnd() && Cur().kind == TokenKind::kKeyword &&
             QualifierKeywords().count(Cur().text)) {
        if (!quals.empty()) quals += ' ';
        quals += Cur().text;
        ++pos_;
      }
      ptr.text = quals;
      ptr.children.push_back(ParseDeclarator(abstract));
      Finish(ptr, first);
      return ptr;
    }
    Node cur;
    if (IsKind(TokenKind::kIdentifier) && !(abstract && IsTypedefName())) {
      cur = Node(NodeKind::kDeclName, Cur().text);
      ++pos_;
      Finish(cur, first);
    } else if (Is("(") && (!abstract || Is("*", 1) || Is("(", 1) || Is("[", 1))) {
      ++pos_;
      Node paren(NodeKind::kDeclParen);
      paren.children.push_back(ParseDeclarator(abstract));
      Expect(")");
      Finish(paren, first);
      cur = std::move(paren);
    } else {
      if (!abstract) Fail("expected a declarator" + Near());
      cur = EmptyNode(NodeKind::kDeclName);
    }
    while (true) {
      if (Is("[")) {
        ++pos_;
        Node arr(NodeKind::kDeclArray);
        arr.children.push_back(std::move(cur));
        if (!Is("]")) arr.children.push_back(ParseConditional());
        Expect("]");
        arr.span = SourceSpan::Cover(arr.children.front().span,
                                     toks_[pos_ - 1].span);
        cur = std::move(arr);
        continue;
      }
      if (Is("(")) {
        ++pos_;
        Node fn(NodeKind::kDeclFunction);
        fn.children.push_back(std::move(cur));
        ParseParams(fn);
        Expect(")");
        fn.span = SourceSpan::Cover(fn.children.front().span,
                                    toks_[pos_ - 1].span);
        cur = std::move(fn);
        continue;
      }
      break;
    }
    return cur;
  }

  void ParseParams(Node& fn) {
    if (Is(")")) return;
    do {
      std::size_t first = pos_;
      if (Accept("...")) {
        Node p(NodeKind::kParam, "...");
        Finish(p, first);
        fn.children.push_back(std::move(p));
        break;
      }
      Node p(NodeKind::kParam);
      p.children.push_back(ParseSpecifiers(false));
      p.children.push_back(ParseDeclarator(true));
      Finish(p, first);
      fn.children.push_back(std::move(p));
    } while (Accept(","));
  }

  Node ParseInitializer() {
    if (!Is("{")) return ParseAssignment();
    std::size_t first = pos_;
    ++pos_;
    Node list(NodeKind::kInitializerList);
    while (!Is("}")) {
      if (Is(".") || Is("[")) Fail("designated initializers are not supported");
      list.children.push_back(ParseInitializer());
      if (!Accept(",")) break;
    }
    Expect("}");
    Finish(list, first);
    return list;
  }

  // Parses specifiers and declarators up to and including ';'.
  Node ParseDeclarationRest(std::size_t first, Node type, bool is_typedef) {
    Node decl(NodeKind::kDeclaration);
    decl.children.push_back(std::move(type));
    if (!Is(";")) {
      do {
        std::size_t d_first = pos_;
        Node init(NodeKind::kInitDeclarator);
        init.children.push_back(ParseDeclarator(false));
        if (is_typedef) typedefs_.insert(DeclaredName(init.children.front()));
        if (Accept("=")) init.children.push_back(ParseInitializer());
        Finish(init, d_first);
        decl.children.push_back(std::move(init));
      } while (Accept(","));
    }
    Expect(";");
    Finish(decl, first);
    return decl;
  }

  Node ParseDeclaration() {
    std::size_t first = pos_;
    bool is_typedef = false;
    Node type = ParseSpecifiers(true, &is_typedef);
    return ParseDeclarationRest(first, std::move(type), is_typedef);
  }

  static bool IsFunctionDeclarator(const Node& d) {
    const Node* n = &d;
    while (n->kind == NodeKind::kDeclPointer) n = &n->children.front();
    return n->kind == NodeKind::kDeclFunction &&
           n->children.front().kind == NodeKind::kDeclName;
  }

  Node ParseExternal() {
    std::size_t first = pos_;
    bool is_typedef = false;
    Node type = ParseSpecifiers(true, &is_typedef);
    if (Is(";")) return ParseDeclarationRest(first, std::move(type), false);
    std::size_t d_first = pos_;
    Node declarator = ParseDeclarator(false);
    if (Is("{")) {
      if (!IsFunctionDeclarator(declarator)) {
        Fail("function body after a non-function declarator");
      }
      Node fn(NodeKind::kFunctionDef);
      fn.children.push_back(std::move(type));
      fn.children.push_back(std::move(declarator));
      fn.children.push_back(ParseCompound());
      Finish(fn, first);
      return fn;
    }
    // Re-enter the generic declaration path with the first declarator parsed.
    Node decl(NodeKind::kDeclaration);
    decl.children.push_back(std::move(type));
    Node init(NodeKind::kInitDeclarator);
    if (is_typedef) typedefs_.insert(DeclaredName(declarator));
    init.children.push_back(std::move(declarator));
    if (Accept("=")) init.children.push_back(ParseInitializer());
    Finish(init, d_first);
    decl.children.push_back(std::move(init));
    while (Accept(",")) {
      std::size_t n_first = pos_;
      Node next(NodeKind::kInitDeclarator);
      next.children.push_back(ParseDeclarator(false));
      if (is_typedef) typedefs_.insert(DeclaredName(next.children.front()));
      if (Accept("=")) next.children.push_back(ParseInitializer());
      Finish(next, n_first);
      decl.children.push_back(std::move(next));
    }
    Expect(";");
    Finish(decl, first);
    return decl;
  }

  // ---- statements ----------------------------------------------------------

  Node ParseCompound() {
    std::size_t first = pos_;
    Expect("{");
    Node block(NodeKind::kCompoundStmt);
    while (!Is("}")) {
      if (AtEnd()) Fail("unterminated block");
      block.children.push_back(ParseStatement());
    }
    Expect("}");
    Finish(block, first);
    return block;
  }

  Node ParseStatement() {
    std::size_t first = pos_;
    const Token& t = Cur();
    if (t.kind == TokenKind::kIncludeDirective) {
      Fail("#include inside a function body");
    }
    if (t.kind == TokenKind::kIdentifier && Is(":", 1)) {
      Fail("labels are not supported");
    }
    if (t.kind == TokenKind::kKeyword) {
      const std::string& kw = t.text;
      if (kw == "if") return ParseIf();
      if (kw == "for") return ParseFor();
      if (kw == "while") {
        ++pos_;
        Node n(NodeKind::kWhile);
        Expect("(");
        n.children.push_back(ParseExpression());
        Expect(")");
        n.children.push_back(ParseStatement());
        Finish(n, first);
        return n;
      }
      if (kw == "do") {
        ++pos_;
        Node n(NodeKind::kDo);
        n.children.push_back(ParseStatement());
        Expect("while");
        Expect("(");
        n.children.push_back(ParseExpression());
        Expect(")");
        Expect(";");
        Finish(n, first);
        return n;
      }
      if (kw == "switch") return ParseSwitch();
      if (kw == "case" || kw == "default") {
        Fail("case label outside the top level of a switch body");
      }
      if (kw == "break" || kw == "continue") {
        ++pos_;
        Expect(";");
        Node n(kw == "break" ? NodeKind::kBreak : NodeKind::kContinue);
        Finish(n, first);
        return n;
      }
      if (kw == "return") {
        ++pos_;
        Node n(NodeKind::kReturn);
        if (!Is(";")) n.children.push_back(ParseExpression());
        Expect(";");
        Finish(n, first);
        return n;
      }
      if (kw == "goto") Fail("goto is not supported");
    }
    if (Is("{")) return ParseCompound();
    if (Is(";")) {
      ++pos_;
      Node n(NodeKind::kEmptyStmt);
      Finish(n, first);
      return n;
    }
    if (StartsDeclaration()) return ParseDeclaration();
    Node n(NodeKind::kExprStmt);
    n.children.push_back(ParseExpression());
    Expect(";");
    Finish(n, first);
    return n;
  }

  Node ParseIf() {
    std::size_t first = pos_;
    Expect("if");
    Node n(NodeKind::kIf);
    Expect("(");
    n.children.push_back(ParseExpression());
    Expect(")");
    n.children.push_back(ParseStatement());
    if (Is("else")) {
      std::size_t e_first = pos_;
      ++pos_;
      Node e(NodeKind::kElse);
      e.children.push_back(ParseStatement());
      Finish(e, e_first);
      n.children.push_back(std::move(e));
    }
    Finish(n, first);
    return n;
  }

  Node ParseFor() {
    std::size_t first = pos_;
    Expect("for");
    Expect("(");
    Node n(NodeKind::kFor);
    if (Is(";")) {
      ++pos_;
      n.children.push_back(EmptyNode());
    } else if (StartsDeclaration()) {
      n.children.push_back(ParseDeclaration());
    } else {
      std::size_t s_first = pos_;
      Node s(NodeKind::kExprStmt);
      s.children.push_back(ParseExpression());
      Expect(";");
      Finish(s, s_first);
      n.children.push_back(std::move(s));
    }
    n.children.push_back(Is(";") ? EmptyNode() : ParseExpression());
    Expect(";");
    n.children.push_back(Is(")") ? EmptyNode() : ParseExpression());
    Expect(")");
    n.children.push_back(ParseStatement());
    Finish(n, first);
    return n;
  }

  Node ParseSwitch() {
    std::size_t first = pos_;
    Expect("switch");
    Node n(NodeKind::kSwitch);
    Expect("(");
    n.children.push_back(ParseExpression());
    Expect(")");
    std::size_t body_first = pos_;
    if (!Is("{")) Fail("switch body must be a block");
    ++pos_;
    Node body(NodeKind::kCompoundStmt);
    while (!Is("}")) {
      if (AtEnd()) Fail("unterminated switch body");
      std::size_t c_first = pos_;
      Node label;
      if (Accept("case")) {
        label = Node(NodeKind::kCase);
        label.children.push_back(ParseConditional());
      } else if (Accept("default")) {
        label = Node(NodeKind::kDefault);
      } else {
        Fail("statement before the first case label");
      }
      Expect(":");
      while (!Is("}") && !Is("case") && !Is("default")) {
        if (AtEnd()) Fail("unterminated switch body");
        label.children.push_back(ParseStatement());
      }
      Finish(label, c_first);
      body.children.push_back(std::move(label));
    }
    Expect("}");
    Finish(body, body_first);
    n.children.push_back(std::move(body));
    Finish(n, first);
    return n;
  }

  // ---- expressions ---------------------------------------------------------

  Node Binary(NodeKind kind, std::string text, Node lhs, Node rhs) {
    Node n(kind, std::move(text));
    n.span = SourceSpan::Cover(lhs.span, rhs.span);
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  Node ParseExpression() {
    Node lhs = ParseAssignment();
    while (Accept(",")) {
      Node rhs = ParseAssignment();
      lhs = Binary(NodeKind::kCommaExpr, "", std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Node ParseAssignment() {
    Node lhs = ParseConditional();
    if (!AtEnd() && Cur().kind == TokenKind::kPunctuator &&
        IsAssignOp(Cur().text)) {
      std::string op = Cur().text;
      ++pos_;
      Node rhs = ParseAssignment();
      if (op == "=") {
        return Binary(NodeKind::kAssign, "", std::move(lhs), std::move(rhs));
      }
      return Binary(NodeKind::kCompoundAssign, op, std::move(lhs),
                    std::move(rhs));
    }
    return lhs;
  }

  Node ParseConditional() {
    Node cond = ParseBinary(4);
    if (!Accept("?")) return cond;
    Node a = ParseExpression();
    Expect(":");
    Node b = ParseConditional();
    Node n(NodeKind::kConditional);
    n.span = SourceSpan::Cover(cond.span, b.span);
    n.children.push_back(std::move(cond));
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
  }

  Node ParseBinary(int min_prec) {
    Node lhs = ParseCast();
    while (!AtEnd() && Cur().kind == TokenKind::kPunctuator) {
      auto it = BinaryPrecedence().find(Cur().text);
      if (it == BinaryPrecedence().end() || it->second < min_prec) break;
      std::string op = Cur().text;
      int prec = it->second;
      ++pos_;
      Node rhs = ParseBinary(prec + 1);
      lhs = Binary(NodeKind::kBinaryOp, op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Node ParseCast() {
    if (Is("(") && StartsTypeName(1)) {
      std::size_t first = pos_;
      ++pos_;
      Node cast(NodeKind::kCast);
      cast.children.push_back(ParseSpecifiers(false));
      cast.children.push_back(ParseDeclarator(true));
      Expect(")");
      if (Is("{")) Fail("compound literals are not supported");
      cast.children.push_back(ParseCast());
      Finish(cast, first);
      return cast;
    }
    return ParseUnary();
  }

  Node ParseUnary() {
    std::size_t first = pos_;
    if (Is("++") || Is("--")) {
      Node n(NodeKind::kUnaryOp, Cur().text);
      ++pos_;
      n.children.push_back(ParseUnary());
      Finish(n, first);
      return n;
    }
    if (Is("&") || Is("*") || Is("+") || Is("-") || Is("~") || Is("!")) {
      Node n(NodeKind::kUnaryOp, Cur().text);
      ++pos_;
      n.children.push_back(ParseCast());
      Finish(n, first);
      return n;
    }
    if (Is("sizeof")) {
      ++pos_;
      if (Is("(") && StartsTypeName(1)) {
        ++pos_;
        Node n(NodeKind::kSizeofType);
        n.children.push_back(ParseSpecifiers(false));
        n.children.push_back(ParseDeclarator(true));
        Expect(")");
        Finish(n, first);
        return n;
      }
      Node n(NodeKind::kSizeofExpr);
      n.children.push_back(ParseUnary());
      Finish(n, first);
      return n;
    }
    return ParsePostfix();
  }

  Node ParsePostfix() {
    std::size_t first = pos_;
    Node e = ParsePrimary();
    while (!AtEnd()) {
      if (Accept("[")) {
        Node n(NodeKind::kIndex);
        n.children.push_back(std::move(e));
        n.children.push_back(ParseExpression());
        Expect("]");
        Finish(n, first);
        e = std::move(n);
      } else if (Accept("(")) {
        Node n(NodeKind::kCall);
        n.children.push_back(std::move(e));
        if (!Is(")")) {
          do {
            n.children.push_back(ParseAssignment());
          } while (Accept(","));
        }
        Expect(")");
        Finish(n, first);
        e = std::move(n);
      } else if (Is(".") || Is("->")) {
        NodeKind kind = Is(".") ? NodeKind::kMemberDot : NodeKind::kMemberArrow;
        ++pos_;
        if (!IsKind(TokenKind::kIdentifier)) Fail("expected member name" + Near());
        Node n(kind, Cur().text);
        ++pos_;
        n.children.push_back(std::move(e));
        Finish(n, first);
        e = std::move(n);
      } else if (Is("++") || Is("--")) {
        Node n(NodeKind::kPostfixOp, Cur().text);
        ++pos_;
        n.children.push_back(std::move(e));
        Finish(n, first);
        e = std::move(n);
      } else {
        break;
      }
    }
    return e;
  }

  Node ParsePrimary() {
    std::size_t first = pos_;
    const Token& t = Cur();
    switch (t.kind) {
      case TokenKind::kIdentifier: {
        Node n(NodeKind::kIdentifierRef, t.text);
        ++pos_;
        Finish(n, first);
        return n;
      }
      case TokenKind::kIntLiteral:
      case TokenKind::kFloatLiteral:
      case TokenKind::kCharLiteral: {
        Node n(NodeKind::kLiteral, t.text);
        ++pos_;
        Finish(n, first);
        return n;
      }
      case TokenKind::kStringLiteral: {
        std::string text = t.text;
        ++pos_;
        while (IsKind(TokenKind::kStringLiteral)) {
          text += ' ';
          text += Cur().text;
          ++pos_;
        }
        Node n(NodeKind::kLiteral, text);
        Finish(n, first);
        return n;
      }
      default:
        break;
    }
    if (Accept("(")) {
      Node n(NodeKind::kParenExpr);
      n.children.push_back(ParseExpression());
      Expect(")");
      Finish(n, first);
      return n;
    }
    Fail("expected an expression" + Near());
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::set<std::string> typedefs_;
};

}  // namespace

Ast Parse(const std::vector<Token>& tokens) { return Parser(tokens).Run(); }

Ast ParseSource(std::string_view source) { return Parse(Lex(source)); }

}  // namespace anonybench::cparse
