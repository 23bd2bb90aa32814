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

#include "anonybench/corpus/preprocess.h"

#include <cctype>
#include <map>
#include <set>
#include <vector>

#include "anonybench/error.h"

namespace anonybench::corpus {

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Skips a string or character literal starting at `i`; returns the index
// just past it (or the end of the line for unterminated literals, which the
// lexer reports later).
std::size_t SkipLiteral(std::string_view s, std::size_t i) {
  char quote = s[i++];
  while (i < s.size() && s[i] != quote && s[i] != '\n') {
    if (s[i] == '\\' && i + 1 < s.size()) ++i;
    ++i;
  }
  return i < s.size() && s[i] == quote ? i + 1 : i;
}

std::string StripComments(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '"' || c == '\'') {
      std::size_t end = SkipLiteral(s, i);
      out.append(s.substr(i, end - i));
      i = end;
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      std::size_t end = s.find("*/", i + 2);
      if (end == std::string_view::npos) {
        throw Error(ErrorKind::kLex, "unterminated comment");
      }
      out += ' ';
      for (std::size_t k = i; k < end; ++k) {
        if (s[k] == '\n') out += '\n';
      }
      i = end + 2;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

std::string JoinContinuations(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == '\n') {
      ++i;
      continue;
    }
    out += s[i];
  }
  return out;
}

std::string TrimRight(std::string line) {
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                           line.back() == '\r')) {
    line.pop_back();
  }
  return line;
}

std::string_view TrimLeft(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

class MacroTable {
 public:
  void Define(const std::string& name, std::string body) {
    macros_[name] = std::move(body);
  }
  void Undefine(const std::string& name) { macros_.erase(name); }
  bool empty() const { return macros_.empty(); }

  std::string Expand(std::string_view text,
                     std::set<std::string>& active) const {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '"' || c == '\'') {
        std::size_t end = SkipLiteral(text, i);
        out.append(text.substr(i, end - i));
        i = end;
      } else if (IsIdentStart(c)) {
        std::size_t start = i;
        while (i < text.size() && IsIdentChar(text[i])) ++i;
        std::string word(text.substr(start, i - start));
        auto it = macros_.find(word);
        if (it != macros_.end() && !active.count(word)) {
          active.insert(word);
          out += Expand(it->second, active);
          active.erase(word);
        } else {
          out += word;
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        // pp-numbers like 1e5 or 0x1F must not be split into identifiers.
        std::size_t start = i;
        while (i < text.size() && (IsIdentChar(text[i]) || text[i] == '.')) ++i;
        out.append(text.substr(start, i - start));
      } else {
        out += c;
        ++i;
      }
    }
    return out;
  }

 private:
  std::map<std::string, std::string> macros_;
};

[[noreturn]] void Unsupported(const std::string& what, int line) {
  throw Error(ErrorKind::kUnsupportedConstruct,
              what + " at line " + std::to_string(line));
}

}  // namespace

std::string PreprocessSource(std::string_view source) {
  std::string text = StripComments(JoinContinuations(source));
  MacroTable macros;
  std::string out;
  std::size_t pos = 0;
  int line_no = 0;
  bool first_line = true;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    bool has_newline = eol != std::string::npos;
    if (!has_newline) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    std::string_view body = TrimLeft(line);
    bool keep = true;
    if (!body.empty() && body.front() == '#') {
      std::string_view rest = TrimLeft(body.substr(1));
      std::size_t w = 0;
      while (w < rest.size() && IsIdentChar(rest[w])) ++w;
      std::string directive(rest.substr(0, w));
      std::string_view after = rest.substr(w);
      if (directive == "include") {
        line = std::string(body);
      } else if (directive == "define") {
        std::string_view def = TrimLeft(after);
        std::size_t n = 0;
        while (n < def.size() && IsIdentChar(def[n])) ++n;
        if (n == 0) Unsupported("malformed #define", line_no);
        std::string name(def.substr(0, n));
        if (n < def.size() && def[n] == '(') {
          Unsupported("function-like macro '" + name + "'", line_no);
        }
        std::string value = TrimRight(std::string(TrimLeft(def.substr(n))));
        macros.Define(name, value);
        keep = false;
      } else if (directive == "undef") {
        std::string_view def = TrimLeft(after);
        std::size_t n = 0;
        while (n < def.size() && IsIdentChar(def[n])) ++n;
        macros.Undefine(std::string(def.substr(0, n)));
        keep = false;
      } else {
        Unsupported("preprocessor directive '#" + directive + "'", line_no);
      }
    } else if (!macros.empty()) {
      std::set<std::string> active;
      line = macros.Expand(line, active);
    }
    if (keep) {
      if (!first_line) out += '\n';
      out += TrimRight(line);
      first_line = false;
    }
    if (!has_newline) break;
  }
  // Keep a trailing newline if the input had one.
  if (!source.empty() && source.back() == '\n' &&
      (out.empty() || out.back() != '\n')) {
    out += '\n';
  }
  return out;
}

Program Preprocess(const Program& program) {
  if (program.stage != Stage::kRaw) {
    throw Error(ErrorKind::kState, "preprocess expects a raw program (" +
                                       program.author + "/" + program.task + ")");
  }
  Program out = program;
  out.source = PreprocessSource(program.source);
  out.stage = Stage::kPreprocessed;
  return out;
}

}  // namespace anonybench::corpus
