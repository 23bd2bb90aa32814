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

#include "anonybench/normalize/rules.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <map>
#include <set>

#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/error.h"
#include "normalize/tree_util.h"

namespace anonybench::normalize {

using cparse::Ast;
using cparse::Node;
using cparse::NodeKind;
using internal::AsBlock;
using internal::HasSideEffects;
using internal::MakeBinary;
using internal::Words;

namespace {

bool IsListParent(NodeKind k) {
  return k == NodeKind::kCompoundStmt || k == NodeKind::kCase ||
         k == NodeKind::kDefault;
}

// Index of the first statement in a list parent (Case keeps its value first).
std::size_t FirstStatement(const Node& n) {
  return n.kind == NodeKind::kCase ? 1 : 0;
}

// Calls fn on the statement vector of every statement-list node.
void ForEachStatementList(Node& root,
                          const std::function<void(Node&, std::size_t)>& fn) {
  cparse::Rewrite(root, [&](Node& n) {
    if (IsListParent(n.kind)) fn(n, FirstStatement(n));
  });
}

bool IsFunctionDeclarator(const Node& d) {
  const Node* n = &d;
  while (n->kind == NodeKind::kDeclPointer || n->kind == NodeKind::kDeclParen) {
    if (n->kind == NodeKind::kDeclPointer) {
      n = &n->children.front();
      continue;
    }
    n = &n->children.front();
  }
  if (n->kind != NodeKind::kDeclFunction) return false;
  const Node* inner = &n->children.front();
  while (inner->kind == NodeKind::kDeclParen) inner = &inner->children.front();
  return inner->kind == NodeKind::kDeclName;
}

// True for a function definition whose return type is plain void.
bool ReturnsVoid(const Node& fd) {
  auto words = Words(fd.child(0).text);
  if (std::find(words.begin(), words.end(), "void") == words.end()) return false;
  if (!fd.child(0).children.empty()) return false;
  const Node* d = &fd.child(1);
  while (d->kind == NodeKind::kDeclParen) d = &d->children.front();
  return d->kind == NodeKind::kDeclFunction;
}

bool IsBareReturn(const Node& s) {
  return s.kind == NodeKind::kReturn && s.children.empty();
}

// ---- Braces -----------------------------------------------------------------

Node BodyBlock(Node stmt) {
  if (stmt.kind == NodeKind::kEmptyStmt) return internal::MakeCompound({});
  return AsBlock(std::move(stmt));
}

void Braces(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    switch (n.kind) {
      case NodeKind::kIf:
        n.child(1) = BodyBlock(std::move(n.child(1)));
        break;
      case NodeKind::kElse:
        if (n.child(0).kind != NodeKind::kIf) {
          n.child(0) = BodyBlock(std::move(n.child(0)));
        }
        break;
      case NodeKind::kFor:
      case NodeKind::kWhile:
        n.children.back() = BodyBlock(std::move(n.children.back()));
        break;
      case NodeKind::kDo:
        n.child(0) = BodyBlock(std::move(n.child(0)));
        break;
      default:
        break;
    }
  });
}

// ---- Multidecl --------------------------------------------------------------

bool DefinesStruct(const Node& type_name) {
  for (const Node& c : type_name.children) {
    if (c.kind == NodeKind::kStructSpec && !c.children.empty()) return true;
  }
  return false;
}

void SplitDeclarations(Node& list, std::size_t first) {
  std::vector<Node> out;
  for (std::size_t i = 0; i < list.children.size(); ++i) {
    Node& s = list.children[i];
    if (i < first || s.kind != NodeKind::kDeclaration ||
        s.children.size() <= 2 || DefinesStruct(s.child(0))) {
      out.push_back(std::move(s));
      continue;
    }
    for (std::size_t j = 1; j < s.children.size(); ++j) {
      Node d(NodeKind::kDeclaration);
      d.children.push_back(s.child(0));
      d.children.push_back(std::move(s.children[j]));
      out.push_back(std::move(d));
    }
  }
  list.children = std::move(out);
}

void Multidecl(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (IsListParent(n.kind)) {
      SplitDeclarations(n, FirstStatement(n));
    } else if (n.kind == NodeKind::kTranslationUnit ||
               n.kind == NodeKind::kStructBody) {
      SplitDeclarations(n, 0);
    }
  });
}

// ---- CompoundAssign ---------------------------------------------------------

void CompoundAssign(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind != NodeKind::kCompoundAssign) return;
    if (HasSideEffects(n.child(0))) return;
    std::string op = n.text.substr(0, n.text.size() - 1);
    Node lhs = n.child(0);
    Node rhs = MakeBinary(op, n.child(0), std::move(n.child(1)));
    Node assign(NodeKind::kAssign);
    assign.children.push_back(std::move(lhs));
    assign.children.push_back(std::move(rhs));
    n = std::move(assign);
  });
}

// ---- Comma ------------------------------------------------------------------

void FlattenComma(Node e, std::vector<Node>& out) {
  if (e.kind == NodeKind::kCommaExpr) {
    FlattenComma(std::move(e.child(0)), out);
    FlattenComma(std::move(e.child(1)), out);
  } else {
    out.push_back(std::move(e));
  }
}

void Comma(Node& root) {
  ForEachStatementList(root, [](Node& list, std::size_t first) {
    std::vector<Node> out;
    for (std::size_t i = 0; i < list.children.size(); ++i) {
      Node& s = list.children[i];
      if (i >= first && s.kind == NodeKind::kExprStmt &&
          s.child(0).kind == NodeKind::kCommaExpr) {
        std::vector<Node> parts;
        FlattenComma(std::move(s.child(0)), parts);
        for (Node& p : parts) out.push_back(internal::MakeExprStmt(std::move(p)));
      } else {
        out.push_back(std::move(s));
      }
    }
    list.children = std::move(out);
  });
}

// ---- Switch2If --------------------------------------------------------------

// A break that would leave the enclosing switch rather than an inner loop.
bool ContainsSwitchBreak(const Node& s) {
  switch (s.kind) {
    case NodeKind::kBreak:
      return true;
    case NodeKind::kFor:
    case NodeKind::kWhile:
    case NodeKind::kDo:
    case NodeKind::kSwitch:
      return false;
    default:
      break;
  }
  if (cparse::IsExpression(s.kind)) return false;
  for (const Node& c : s.children) {
    if (ContainsSwitchBreak(c)) return true;
  }
  return false;
}

struct CaseGroup {
  std::vector<Node> values;
  bool is_default = false;
  std::vector<Node> stmts;
};

bool ConvertSwitch(Node& sw) {
  const Node& cond = sw.child(0);
  if (HasSideEffects(cond)) return false;
  const Node& body = sw.child(1);
  if (body.children.empty()) return false;

  std::vector<CaseGroup> groups;
  CaseGroup pending;
  for (const Node& label : body.children) {
    std::size_t first = 0;
    if (label.kind == NodeKind::kCase) {
      if (HasSideEffects(label.child(0))) return false;
      pending.values.push_back(label.child(0));
      first = 1;
    } else {
      pending.is_default = true;
    }
    if (label.children.size() == first) continue;
    pending.stmts.assign(label.children.begin() + static_cast<long>(first),
                         label.children.end());
    groups.push_back(std::move(pending));
    pending = CaseGroup{};
  }
  // Labels with no statements at the end of the switch do nothing.

  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& stmts = groups[g].stmts;
    const NodeKind last = stmts.back().kind;
    if (last == NodeKind::kBreak) {
      stmts.pop_back();
    } else if (last != NodeKind::kReturn && last != NodeKind::kContinue &&
               g + 1 != groups.size()) {
      return false;  // falls through into the next group
    }
    for (const Node& s : stmts) {
      if (ContainsSwitchBreak(s)) return false;
    }
  }

  int eq_lhs = internal::BinaryPrecedence("==");
  auto condition = [&](const std::vector<Node>& values) {
    Node out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      Node test = MakeBinary("==", internal::ParenthesizeFor(cond, eq_lhs),
                             values[i]);
      out = i == 0 ? std::move(test) : MakeBinary("||", std::move(out),
                                                  std::move(test));
    }
    return out;
  };

  std::optional<Node> tail;
  for (auto& g : groups) {
    if (g.is_default) tail = internal::MakeCompound(g.stmts);
  }
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (it->is_default) continue;
    Node n(NodeKind::kIf);
    n.children.push_back(condition(it->values));
    n.children.push_back(internal::MakeCompound(std::move(it->stmts)));
    if (tail) {
      Node e(NodeKind::kElse);
      e.children.push_back(std::move(*tail));
      n.children.push_back(std::move(e));
    }
    tail = std::move(n);
  }
  sw = tail ? std::move(*tail) : internal::MakeCompound({});
  return true;
}

void Switch2If(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind == NodeKind::kSwitch) ConvertSwitch(n);
  });
}

// ---- FlattenIf --------------------------------------------------------------

Node* SoleInnerIf(Node& then) {
  if (then.kind == NodeKind::kIf) return &then;
  if (then.kind == NodeKind::kCompoundStmt && then.children.size() == 1 &&
      then.child(0).kind == NodeKind::kIf) {
    return &then.child(0);
  }
  return nullptr;
}

void FlattenIf(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind != NodeKind::kIf || n.children.size() != 2) return;
    Node* inner = SoleInnerIf(n.child(1));
    if (inner == nullptr) return;
    const bool inner_else = inner->children.size() == 3;
    // With an inner else the outer condition is evaluated twice.
    if (inner_else && HasSideEffects(n.child(0))) return;
    Node outer_cond = n.child(0);
    Node joined = MakeBinary("&&", n.child(0), std::move(inner->child(0)));
    Node out(NodeKind::kIf);
    out.children.push_back(std::move(joined));
    out.children.push_back(std::move(inner->child(1)));
    if (inner_else) {
      Node retry(NodeKind::kIf);
      retry.children.push_back(std::move(outer_cond));
      Node& else_stmt = inner->child(2).child(0);
      retry.children.push_back(else_stmt.kind == NodeKind::kIf
                                   ? AsBlock(std::move(else_stmt))
                                   : std::move(else_stmt));
      Node e(NodeKind::kElse);
      e.children.push_back(std::move(retry));
      out.children.push_back(std::move(e));
    }
    n = std::move(out);
  });
}

// ---- IfElse -----------------------------------------------------------------

bool EndsInJump(const Node& s) {
  switch (s.kind) {
    case NodeKind::kReturn:
    case NodeKind::kBreak:
    case NodeKind::kContinue:
      return true;
    case NodeKind::kCompoundStmt:
      return !s.children.empty() && EndsInJump(s.children.back());
    default:
      return false;
  }
}

void IfElse(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind != NodeKind::kCompoundStmt) return;
    for (std::size_t i = 0; i + 1 < n.children.size(); ++i) {
      Node& s = n.children[i];
      if (s.kind != NodeKind::kIf || s.children.size() != 2) continue;
      if (!EndsInJump(s.child(1))) continue;
      std::vector<Node> rest(
          std::make_move_iterator(n.children.begin() + static_cast<long>(i) + 1),
          std::make_move_iterator(n.children.end()));
      n.children.resize(i + 1);
      Node e(NodeKind::kElse);
      e.children.push_back(internal::MakeCompound(std::move(rest)));
      n.children[i].children.push_back(std::move(e));
      break;
    }
  });
}

// ---- UnnecessaryReturn ------------------------------------------------------

void StripTailReturns(Node& if_stmt);

void StripBlockTail(Node& block) {
  if (block.kind != NodeKind::kCompoundStmt) return;
  if (!block.children.empty() && IsBareReturn(block.children.back())) {
    block.children.pop_back();
  }
  if (!block.children.empty() && block.children.back().kind == NodeKind::kIf) {
    StripTailReturns(block.children.back());
  }
}

void StripTailReturns(Node& if_stmt) {
  StripBlockTail(if_stmt.child(1));
  if (if_stmt.children.size() == 3) {
    Node& e = if_stmt.child(2).child(0);
    if (e.kind == NodeKind::kIf) {
      StripTailReturns(e);
    } else {
      StripBlockTail(e);
    }
  }
}

void UnnecessaryReturn(Node& root) {
  for (Node& fd : root.children) {
    if (fd.kind != NodeKind::kFunctionDef || !ReturnsVoid(fd)) continue;
    auto& body = fd.child(2).children;
    std::size_t end = body.size();
    if (end > 0 && IsBareReturn(body[end - 1])) --end;
    if (end > 0 && body[end - 1].kind == NodeKind::kIf) {
      StripTailReturns(body[end - 1]);
    }
  }
}

// ---- VoidReturn -------------------------------------------------------------

void VoidReturn(Node& root) {
  for (Node& fd : root.children) {
    if (fd.kind != NodeKind::kFunctionDef || !ReturnsVoid(fd)) continue;
    auto& body = fd.child(2).children;
    if (body.empty() || body.back().kind != NodeKind::kReturn) {
      body.emplace_back(NodeKind::kReturn);
    }
  }
}

// ---- MainParams -------------------------------------------------------------

std::string FreshName(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string name = base + "_" + std::to_string(i);
    if (!used.count(name)) return name;
  }
}

void MainParams(Node& root) {
  for (Node& fd : root.children) {
    if (fd.kind != NodeKind::kFunctionDef) continue;
    if (cparse::DeclaredName(fd.child(1)) != "main") continue;
    Node& decl = fd.child(1);
    if (decl.kind != NodeKind::kDeclFunction) continue;
    const bool no_params =
        decl.children.size() == 1 ||
        (decl.children.size() == 2 && decl.child(1).children.size() == 2 &&
         decl.child(1).child(0).text == "void" &&
         decl.child(1).child(0).children.empty() &&
         decl.child(1).child(1).kind == NodeKind::kDeclName &&
         decl.child(1).child(1).text.empty());
    if (no_params) {
      std::set<std::string> used = internal::CollectNames(fd);
      std::string argc = FreshName("argc", used);
      used.insert(argc);
      std::string argv = FreshName("argv", used);
      Node p1(NodeKind::kParam);
      p1.children.emplace_back(NodeKind::kTypeName, "int");
      p1.children.emplace_back(NodeKind::kDeclName, argc);
      Node name(NodeKind::kDeclName, argv);
      Node ptr(NodeKind::kDeclPointer);
      ptr.children.push_back(std::move(name));
      Node ptr2(NodeKind::kDeclPointer);
      ptr2.children.push_back(std::move(ptr));
      Node p2(NodeKind::kParam);
      p2.children.emplace_back(NodeKind::kTypeName, "char");
      p2.children.push_back(std::move(ptr2));
      decl.children.resize(1);
      decl.children.push_back(std::move(p1));
      decl.children.push_back(std::move(p2));
    }
    auto words = Words(fd.child(0).text);
    bool returns_int = std::find(words.begin(), words.end(), "int") != words.end();
    auto& body = fd.child(2).children;
    if (returns_int && (body.empty() || body.back().kind != NodeKind::kReturn)) {
      Node ret(NodeKind::kReturn);
      ret.children.push_back(internal::Literal("0"));
      body.push_back(std::move(ret));
    }
  }
}

// ---- Types ------------------------------------------------------------------

std::string TypeKey(const std::string& spelling) {
  auto w = Words(spelling);
  std::sort(w.begin(), w.end());
  return internal::JoinWords(w);
}

bool IsStorageOrQualifier(const std::string& w) {
  static const std::set<std::string> k = {"typedef", "extern",   "static",
                                          "auto",    "register", "const",
                                          "volatile", "inline",  "restrict"};
  return k.count(w) > 0;
}

void Types(Node& root, const TypeTable& table) {
  std::map<std::string, std::string> by_key;
  for (const auto& [from, to] : table) by_key[TypeKey(from)] = to;
  cparse::Rewrite(root, [&](Node& n) {
    if (n.kind != NodeKind::kTypeName || !n.children.empty()) return;
    std::vector<std::string> prefix, base;
    for (auto& w : Words(n.text)) {
      (IsStorageOrQualifier(w) ? prefix : base).push_back(w);
    }
    if (base.empty()) return;
    auto it = by_key.find(TypeKey(internal::JoinWords(base)));
    if (it == by_key.end()) return;
    prefix.push_back(it->second);
    n.text = internal::JoinWords(prefix);
  });
}

// ---- Renaming ---------------------------------------------------------------

class Renamer {
 public:
  explicit Renamer(std::vector<RenameEntry>* log) : log_(log) {}

  void Run(Node& tu) {
    Precollect(tu);
    scopes_.push_back({0, {}});
    for (const auto& [orig, renamed] : functions_) {
      Bind(orig, renamed, "function", /*log=*/true);
    }
    for (Node& item : tu.children) {
      if (item.kind == NodeKind::kDeclaration) {
        Declaration(item);
      } else if (item.kind == NodeKind::kFunctionDef) {
        FunctionDef(item);
      }
    }
  }

 private:
  struct Binding {
    std::string renamed;
    std::string kind;
  };
  struct Scope {
    int id;
    std::map<std::string, Binding> names;
  };

  void Precollect(Node& tu) {
    std::set<std::string> declared;
    std::vector<std::string> tags, fields;
    cparse::Visit(tu, [&](const Node& n, int) {
      if (n.kind == NodeKind::kDeclName && !n.text.empty()) declared.insert(n.text);
      if (n.kind == NodeKind::kStructSpec && !n.children.empty() &&
          !n.text.empty()) {
        tags.push_back(n.text);
      }
      if (n.kind == NodeKind::kStructBody) {
        for (const Node& member : n.children) {
          for (std::size_t j = 1; j < member.children.size(); ++j) {
            std::string f = cparse::DeclaredName(member.child(j).child(0));
            if (!f.empty()) fields.push_back(f);
          }
        }
      }
    });
    declared.insert(tags.begin(), tags.end());
    declared.insert(fields.begin(), fields.end());
    // Names that stay in the program verbatim must not be generated.
    for (const auto& name : internal::CollectNames(tu)) {
      if (!declared.count(name)) reserved_.insert(name);
    }
    reserved_.insert("main");

    std::set<std::string> defined;
    for (const Node& item : tu.children) {
      if (item.kind == NodeKind::kFunctionDef) {
        std::string name = cparse::DeclaredName(item.child(1));
        if (name != "main") defined.insert(name);
      }
    }
    // Names that are declared but kept: externs and undefined prototypes.
    cparse::Visit(tu, [&](const Node& n, int) {
      if (n.kind != NodeKind::kDeclaration) return;
      auto words = Words(n.child(0).text);
      bool is_extern =
          std::find(words.begin(), words.end(), "extern") != words.end();
      for (std::size_t j = 1; j < n.children.size(); ++j) {
        const Node& d = n.child(j).child(0);
        std::string name = cparse::DeclaredName(d);
        if ((IsFunctionDeclarator(d) && !defined.count(name)) || is_extern) {
          reserved_.insert(name);
        }
      }
    });

    for (const Node& item : tu.children) {
      std::vector<std::string> names;
      if (item.kind == NodeKind::kFunctionDef) {
        names.push_back(cparse::DeclaredName(item.child(1)));
      } else if (item.kind == NodeKind::kDeclaration) {
        for (std::size_t j = 1; j < item.children.size(); ++j) {
          names.push_back(cparse::DeclaredName(item.child(j).child(0)));
        }
      }
      for (const auto& name : names) {
        if (defined.count(name) && !functions_.count(name)) {
          functions_[name] = Fresh("func_", func_counter_);
        }
      }
    }
    for (const auto& t : tags) {
      if (!tags_.count(t)) tags_[t] = Fresh("struct_", tag_counter_);
    }
    for (const auto& f : fields) {
      if (!fields_.count(f)) {
        fields_[f] = Fresh("field_", field_counter_);
        if (log_) log_->push_back({0, "field", f, fields_[f]});
      }
    }
    for (const auto& t : tags) {
      if (log_ && !logged_tags_.count(t)) {
        logged_tags_.insert(t);
        log_->push_back({0, "tag", t, tags_[t]});
      }
    }
  }

  std::string Fresh(const std::string& prefix, int& counter) {
    while (true) {
      std::string name = prefix + std::to_string(counter++);
      if (!reserved_.count(name)) return name;
    }
  }

  void Bind(const std::string& orig, const std::string& renamed,
            const std::string& kind, bool log) {
    scopes_.back().names[orig] = {renamed, kind};
    if (log && log_) log_->push_back({scopes_.back().id, kind, orig, renamed});
  }

  const Binding* Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->names.find(name);
      if (f != it->names.end()) return &f->second;
    }
    return nullptr;
  }

  void Push() { scopes_.push_back({next_scope_++, {}}); }
  void Pop() { scopes_.pop_back(); }

  void TypeName(Node& tn) {
    auto words = Words(tn.text);
    bool changed = false;
    for (auto& w : words) {
      const Binding* b = Lookup(w);
      if (b && b->kind == "type") {
        w = b->renamed;
        changed = true;
      }
    }
    if (changed) tn.text = internal::JoinWords(words);
    for (Node& spec : tn.children) {
      auto t = tags_.find(spec.text);
      if (t != tags_.end()) spec.text = t->second;
      if (spec.children.empty()) continue;
      for (Node& member : spec.child(0).children) {
        TypeName(member.child(0));
        for (std::size_t j = 1; j < member.children.size(); ++j) {
          Node& d = member.child(j).child(0);
          Node& name = cparse::DeclaredNameNode(d);
          auto f = fields_.find(name.text);
          if (f != fields_.end()) name.text = f->second;
          DeclaratorRest(d, nullptr);
        }
      }
    }
  }

  // Array sizes and prototype parameters; `own_params` is declared into the
  // current scope instead of a fresh prototype scope.
  void DeclaratorRest(Node& d, const Node* own_params) {
    switch (d.kind) {
      case NodeKind::kDeclName:
        return;
      case NodeKind::kDeclArray:
        DeclaratorRest(d.child(0), own_params);
        if (d.children.size() > 1) Expr(d.child(1));
        return;
      case NodeKind::kDeclFunction: {
        DeclaratorRest(d.child(0), own_params);
        const bool own = &d == own_params;
        if (!own) Push();
        for (std::size_t i = 1; i < d.children.size(); ++i) Param(d.child(i));
        if (!own) Pop();
        return;
      }
      default:
        DeclaratorRest(d.child(0), own_params);
        return;
    }
  }

  void Param(Node& p) {
    if (p.children.empty()) return;  // "..."
    TypeName(p.child(0));
    Node& name = cparse::DeclaredNameNode(p.child(1));
    if (!name.text.empty()) {
      std::string fresh = Fresh("var_", var_counter_);
      Bind(name.text, fresh, "variable", true);
      name.text = fresh;
    }
    DeclaratorRest(p.child(1), nullptr);
  }

  void Declaration(Node& decl) {
    auto words = Words(decl.child(0).text);
    auto has = [&](const char* w) {
      return std::find(words.begin(), words.end(), w) != words.end();
    };
    const bool is_typedef = has("typedef");
    const bool is_extern = has("extern");
    TypeName(decl.child(0));
    for (std::size_t j = 1; j < decl.children.size(); ++j) {
      Node& init = decl.child(j);
      Node& d = init.child(0);
      Node& name = cparse::DeclaredNameNode(d);
      const std::string orig = name.text;
      if (IsFunctionDeclarator(d)) {
        auto f = functions_.find(orig);
        std::string target = f != functions_.end() ? f->second : orig;
        if (scopes_.size() > 1) Bind(orig, target, "function", false);
        name.text = target;
      } else if (is_typedef) {
        std::string fresh = Fresh("type_", type_counter_);
        Bind(orig, fresh, "type", true);
        name.text = fresh;
      } else if (is_extern) {
        const Binding* b = Lookup(orig);
        std::string target = b ? b->renamed : orig;
        Bind(orig, target, "variable", false);
        name.text = target;
      } else if (!orig.empty()) {
        std::string fresh = Fresh("var_", var_counter_);
        Bind(orig, fresh, "variable", true);
        name.text = fresh;
      }
      DeclaratorRest(d, nullptr);
      if (init.children.size() > 1) Initializer(init.child(1));
    }
  }

  void Initializer(Node& n) {
    if (n.kind == NodeKind::kInitializerList) {
      for (Node& c : n.children) Initializer(c);
    } else {
      Expr(n);
    }
  }

  void FunctionDef(Node& fd) {
    TypeName(fd.child(0));
    Node& d = fd.child(1);
    Node& name = cparse::DeclaredNameNode(d);
    auto f = functions_.find(name.text);
    if (f != functions_.end()) name.text = f->second;
    Push();
    const Node* own = internal::InnermostFunctionDeclarator(d);
    DeclaratorRest(d, own);
    for (Node& s : fd.child(2).children) Stmt(s);
    Pop();
  }

  void Stmt(Node& s) {
    switch (s.kind) {
      case NodeKind::kCompoundStmt:
        Push();
        for (Node& c : s.children) Stmt(c);
        Pop();
        return;
      case NodeKind::kDeclaration:
        Declaration(s);
        return;
      case NodeKind::kFor:
        Push();
        for (Node& c : s.children) Stmt(c);
        Pop();
        return;
      default:
        break;
    }
    if (cparse::IsExpression(s.kind)) {
      Expr(s);
      return;
    }
    for (Node& c : s.children) Stmt(c);
  }

  void Expr(Node& e) {
    switch (e.kind) {
      case NodeKind::kIdentifierRef: {
        const Binding* b = Lookup(e.text);
        if (b) e.text = b->renamed;
        return;
      }
      case NodeKind::kMemberDot:
      case NodeKind::kMemberArrow: {
        auto f = fields_.find(e.text);
        if (f != fields_.end()) e.text = f->second;
        Expr(e.child(0));
        return;
      }
      case NodeKind::kCast:
      case NodeKind::kSizeofType:
        TypeName(e.child(0));
        DeclaratorRest(e.child(1), nullptr);
        if (e.children.size() > 2) Expr(e.child(2));
        return;
      default:
        for (Node& c : e.children) Expr(c);
        return;
    }
  }

  std::vector<RenameEntry>* log_;
  std::vector<Scope> scopes_;
  int next_scope_ = 1;
  int var_counter_ = 0;
  int func_counter_ = 0;
  int type_counter_ = 0;
  int tag_counter_ = 0;
  int field_counter_ = 0;
  std::set<std::string> reserved_;
  std::map<std::string, std::string> functions_;
  std::map<std::string, std::string> tags_;
  std::map<std::string, std::string> fields_;
  std::set<std::string> logged_tags_;
};

// ---- Paren ------------------------------------------------------------------

void Paren(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind == NodeKind::kSizeofExpr) return;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      Node& c = n.children[i];
      while (c.kind == NodeKind::kParenExpr &&
             internal::Precedence(c.child(0)) >=
                 internal::RequiredPrecedence(n, i)) {
        Node inner = std::move(c.child(0));
        c = std::move(inner);
      }
    }
  });
}

// True if a following `else` would bind inside `s`.
bool EndsInOpenIf(const Node& s) {
  switch (s.kind) {
    case NodeKind::kIf:
      return s.children.size() == 2 || EndsInOpenIf(s.child(2).child(0));
    case NodeKind::kWhile: return EndsInOpenIf(s.child(1));
    case NodeKind::kFor: return EndsInOpenIf(s.child(3));
    default: return false;
  }
}

// Rewrites can leave an open if as the unbraced then-branch of an if with
// an else; braces keep the else attached where it was.
void BraceDanglingThen(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind == NodeKind::kIf && n.children.size() == 3 && EndsInOpenIf(n.child(1))) {
      n.child(1) = AsBlock(std::move(n.child(1)));
    }
  });
}

void ApplyInPlace(Node& root, Rule rule, const NormalizeOptions& options) {
  switch (rule) {
    case Rule::kBraces: Braces(root); break;
    case Rule::kMultidecl: Multidecl(root); break;
    case Rule::kCompoundAssign: CompoundAssign(root); break;
    case Rule::kComma: Comma(root); break;
    case Rule::kSwitch2If: Switch2If(root); break;
    case Rule::kFlattenIf: FlattenIf(root); break;
    case Rule::kIfElse: IfElse(root); break;
    case Rule::kUnnecessaryReturn: UnnecessaryReturn(root); break;
    case Rule::kVoidReturn: VoidReturn(root); break;
    case Rule::kMainParams: MainParams(root); break;
    case Rule::kTypes: Types(root, options.types); break;
    case Rule::kRenaming: Renamer(nullptr).Run(root); break;
    case Rule::kParen: Paren(root); break;
  }
  BraceDanglingThen(root);
}

}  // namespace

std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kBraces: return "Braces";
    case Rule::kMultidecl: return "Multidecl";
    case Rule::kCompoundAssign: return "CompoundAssign";
    case Rule::kComma: return "Comma";
    case Rule::kSwitch2If: return "Switch2If";
    case Rule::kFlattenIf: return "FlattenIf";
    case Rule::kIfElse: return "IfElse";
    case Rule::kUnnecessaryReturn: return "UnnecessaryReturn";
    case Rule::kVoidReturn: return "VoidReturn";
    case Rule::kMainParams: return "MainParams";
    case Rule::kTypes: return "Types";
    case Rule::kRenaming: return "Renaming";
    case Rule::kParen: return "Paren";
  }
  return "?";
}

Rule ParseRule(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c != '-' && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
  };
  for (Rule r : kRuleOrder) {
    if (lower(RuleName(r)) == lower(name)) return r;
  }
  throw Error(ErrorKind::kParameter, "unknown rule '" + std::string(name) + "'");
}

const TypeTable& Lp64TypeTable() {
  static const TypeTable k = {
      {"signed", "int"},
      {"signed int", "int"},
      {"int32_t", "int"},
      {"unsigned", "unsigned int"},
      {"uint32_t", "unsigned int"},
      {"short int", "short"},
      {"signed short", "short"},
      {"signed short int", "short"},
      {"int16_t", "short"},
      {"unsigned short int", "unsigned short"},
      {"uint16_t", "unsigned short"},
      {"int8_t", "signed char"},
      {"uint8_t", "unsigned char"},
      {"long int", "long"},
      {"signed long", "long"},
      {"signed long int", "long"},
      {"long long", "long"},
      {"long long int", "long"},
      {"signed long long", "long"},
      {"signed long long int", "long"},
      {"int64_t", "long"},
      {"ptrdiff_t", "long"},
      {"unsigned long int", "unsigned long"},
      {"unsigned long long", "unsigned long"},
      {"unsigned long long int", "unsigned long"},
      {"uint64_t", "unsigned long"},
      {"size_t", "unsigned long"},
      {"long double", "long double"},
  };
  return k;
}

Ast ApplyRule(const Ast& ast, Rule rule, const NormalizeOptions& options) {
  Ast out = ast;
  ApplyInPlace(out.root, rule, options);
  return out;
}

Ast Normalize(const Ast& ast, const NormalizeOptions& options) {
  Ast cur = ast;
  for (int pass = 0; pass < options.max_iterations; ++pass) {
    Ast next = cur;
    for (Rule r : kRuleOrder) ApplyInPlace(next.root, r, options);
    if (cparse::StructurallyEqual(next, cur)) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::kInternal,
              "normalization did not reach a fixed point within " +
                  std::to_string(options.max_iterations) + " passes");
}

std::string NormalizeSource(const std::string& source,
                            const NormalizeOptions& options) {
  return cparse::Print(Normalize(cparse::ParseSource(source), options));
}

Ast RenameIdentifiers(const Ast& ast, std::vector<RenameEntry>* log) {
  Ast out = ast;
  Renamer(log).Run(out.root);
  return out;
}

}  // namespace anonybench::normalize
