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

#include "anonybench/normalize/clues.h"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/error.h"
#include "normalize/tree_util.h"

namespace anonybench::normalize {

using cparse::Ast;
using cparse::Node;
using cparse::NodeKind;

const std::vector<std::string>& StandardHeaderSuperset() {
  static const std::vector<std::string> k = {
      "assert.h", "ctype.h",  "errno.h",  "float.h",  "inttypes.h",
      "limits.h", "locale.h", "math.h",   "setjmp.h", "signal.h",
      "stdarg.h", "stddef.h", "stdint.h", "stdio.h",  "stdlib.h",
      "string.h", "time.h"};
  return k;
}

namespace {

// Splits `"a" "b"` into its quoted pieces.
std::vector<std::string> Pieces(const std::string& spelling) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < spelling.size()) {
    if (spelling[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < spelling.size() && spelling[i] != '"') ++i;  // prefix
    ++i;
    while (i < spelling.size() && spelling[i] != '"') {
      i += spelling[i] == '\\' ? 2 : 1;
    }
    ++i;
    out.push_back(spelling.substr(start, i - start));
  }
  return out;
}

int PieceLength(const std::string& piece) {
  int n = 0;
  std::size_t i = piece.find('"') + 1;
  const std::size_t end = piece.size() - 1;
  auto is_oct = [](char c) { return c >= '0' && c <= '7'; };
  while (i < end) {
    if (piece[i] != '\\') {
      ++i;
      ++n;
      continue;
    }
    ++i;
    if (piece[i] == 'x') {
      ++i;
      while (i < end && std::isxdigit(static_cast<unsigned char>(piece[i]))) ++i;
    } else if (is_oct(piece[i])) {
      int digits = 0;
      while (i < end && digits < 3 && is_oct(piece[i])) {
        ++i;
        ++digits;
      }
    } else {
      ++i;
    }
    ++n;
  }
  return n;
}

bool IsPlainString(const std::string& spelling) {
  if (spelling.empty() || spelling[0] != '"') return false;
  for (const auto& p : Pieces(spelling)) {
    if (p[0] != '"') return false;
  }
  return true;
}

// Whether a declarator chain describes an array of non-pointers, whose
// string initializers fix the array size.
bool IsCharArrayDeclarator(const Node& d) {
  bool array = false;
  const Node* n = &d;
  while (true) {
    if (n->kind == NodeKind::kDeclPointer) return false;
    if (n->kind == NodeKind::kDeclArray) array = true;
    if (n->kind == NodeKind::kDeclName || n->children.empty()) break;
    n = &n->children.front();
  }
  return array;
}

void PadStrings(Node& n, int min_len, bool frozen) {
  if (n.kind == NodeKind::kLiteral) {
    if (!frozen && IsPlainString(n.text)) n.text = PadStringLiteral(n.text, min_len);
    return;
  }
  if (n.kind == NodeKind::kSizeofExpr) return;
  if (n.kind == NodeKind::kInitDeclarator) {
    bool fixed = IsCharArrayDeclarator(n.child(0));
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      PadStrings(n.children[i], min_len, frozen || (i == 1 && fixed));
    }
    return;
  }
  for (Node& c : n.children) PadStrings(c, min_len, frozen);
}

void ReplaceHeaders(Node& tu, const std::vector<std::string>& headers) {
  std::vector<Node> includes;
  std::set<std::string> seen;
  for (const auto& h : headers) {
    std::string text = "<" + h + ">";
    if (seen.insert(text).second) includes.emplace_back(NodeKind::kInclude, text);
  }
  std::vector<Node> rest;
  for (Node& item : tu.children) {
    if (item.kind == NodeKind::kInclude) {
      if (seen.insert(item.text).second) includes.push_back(std::move(item));
    } else {
      rest.push_back(std::move(item));
    }
  }
  for (Node& r : rest) includes.push_back(std::move(r));
  tu.children = std::move(includes);
}

Node DecoyCall(const std::string& signature) {
  std::string text = signature;
  if (text.find(';') == std::string::npos) text += ';';
  Ast sig;
  try {
    sig = cparse::ParseSource(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParameter,
                "cannot parse decoy signature '" + signature + "': " + e.what());
  }
  if (sig.root.children.size() != 1 ||
      sig.root.child(0).kind != NodeKind::kDeclaration ||
      sig.root.child(0).children.size() != 2) {
    throw Error(ErrorKind::kParameter,
                "decoy '" + signature + "' must declare exactly one function");
  }
  const Node& d = sig.root.child(0).child(1).child(0);
  const Node* fn = internal::InnermostFunctionDeclarator(d);
  std::string name = cparse::DeclaredName(d);
  if (fn == nullptr || name.empty()) {
    throw Error(ErrorKind::kParameter,
                "decoy '" + signature + "' is not a function prototype");
  }
  Node call(NodeKind::kCall);
  call.children.push_back(internal::Ident(name));
  for (std::size_t i = 1; i < fn->children.size(); ++i) {
    const Node& p = fn->child(i);
    if (p.children.empty()) continue;  // "..."
    const Node& type = p.child(0);
    const Node& pd = p.child(1);
    if (type.text == "void" && pd.kind == NodeKind::kDeclName) continue;
    if (!type.children.empty() && pd.kind == NodeKind::kDeclName) {
      throw Error(ErrorKind::kParameter,
                  "decoy '" + signature + "' takes a struct by value");
    }
    call.children.push_back(internal::Literal("0"));
  }
  return internal::MakeExprStmt(std::move(call));
}

void InsertDecoys(Node& tu, const std::vector<std::string>& decoys) {
  if (decoys.empty()) return;
  std::vector<Node> calls;
  for (const auto& s : decoys) calls.push_back(DecoyCall(s));
  Node* target = nullptr;
  for (Node& item : tu.children) {
    if (item.kind != NodeKind::kFunctionDef) continue;
    if (target == nullptr || cparse::DeclaredName(item.child(1)) == "main") {
      target = &item;
    }
    if (cparse::DeclaredName(item.child(1)) == "main") break;
  }
  if (target == nullptr) return;
  Node guard(NodeKind::kIf);
  guard.children.push_back(internal::Literal("0"));
  guard.children.push_back(internal::MakeCompound(std::move(calls)));
  auto& body = target->child(2).children;
  body.insert(body.begin(), std::move(guard));
}

void StripCastParams(Node& root) {
  cparse::Rewrite(root, [](Node& n) {
    if (n.kind != NodeKind::kCast && n.kind != NodeKind::kSizeofType) return;
    cparse::Rewrite(n.child(1), [](Node& d) {
      if (d.kind != NodeKind::kDeclFunction) return;
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        Node& p = d.child(i);
        if (p.children.size() == 2) cparse::DeclaredNameNode(p.child(1)).text.clear();
      }
    });
  });
}

}  // namespace

int DecodedLength(const std::string& spelling) {
  int n = 0;
  for (const auto& p : Pieces(spelling)) n += PieceLength(p);
  return n;
}

std::string PadStringLiteral(const std::string& spelling, int min_len) {
  if (!IsPlainString(spelling)) return spelling;
  int len = DecodedLength(spelling);
  if (len >= min_len) return spelling;
  std::string out = spelling.substr(0, spelling.size() - 1);
  out += "\\0";
  out.append(static_cast<std::size_t>(min_len - len - 1), '#');
  out += '"';
  return out;
}

std::vector<std::string> ParseDecoyList(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.rfind("//", 0) == 0) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> LoadDecoyList(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseDecoyList(ss.str());
}

Ast EliminateClues(const Ast& ast, const ClueOptions& options) {
  if (options.pad_strings && options.min_string_len < 0) {
    throw Error(ErrorKind::kParameter, "minimum string length must be >= 0");
  }
  Ast out = ast;
  if (options.pad_strings) PadStrings(out.root, options.min_string_len, false);
  if (options.replace_headers) ReplaceHeaders(out.root, options.headers);
  InsertDecoys(out.root, options.decoys);
  if (options.strip_cast_params) StripCastParams(out.root);
  return out;
}

std::string EliminateCluesSource(const std::string& source,
                                 const ClueOptions& options) {
  return cparse::Print(EliminateClues(cparse::ParseSource(source), options));
}

}  // namespace anonybench::normalize
