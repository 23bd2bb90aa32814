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

#include "anonybench/cparse/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "anonybench/error.h"

namespace anonybench::cparse {

std::string ToString(const SourceSpan& span) {
  return "[" + std::to_string(span.byte_start) + "," +
         std::to_string(span.byte_end) + ") lines " +
         std::to_string(span.line_start) + "-" + std::to_string(span.line_end);
}

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kIntLiteral: return "int-literal";
    case TokenKind::kFloatLiteral: return "float-literal";
    case TokenKind::kStringLiteral: return "string-literal";
    case TokenKind::kCharLiteral: return "char-literal";
    case TokenKind::kPunctuator: return "punctuator";
    case TokenKind::kIncludeDirective: return "include-directive";
  }
  return "?";
}

const std::vector<std::string>& Keywords() {
  static const std::vector<std::string> kKeywords = {
      "_Bool",    "_Complex", "_Imaginary", "auto",   "break",    "case",
      "char",     "const",    "continue",   "default", "do",      "double",
      "else",     "enum",     "extern",     "float",  "for",      "goto",
      "if",       "inline",   "int",        "long",   "register", "restrict",
      "return",   "short",    "signed",     "sizeof", "static",   "struct",
      "switch",   "typedef",  "union",      "unsigned", "void",   "volatile",
      "while"};
  return kKeywords;
}

bool IsKeyword(std::string_view word) {
  const auto& kw = Keywords();
  return std::binary_search(kw.begin(), kw.end(), word);
}

namespace {

// Longest match first.
constexpr std::array<std::string_view, 48> kPunctuators = {
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "*=",  "/=", "%=", "+=", "-=", "&=", "^=", "|=", "[",  "]",
    "(",   ")",   "{",   "}",  ".",  "&",  "*",  "+",  "-",  "~",  "!",  "/",
    "%",   "<",   ">",   "^",  "|",  "?",  ":",  ";",  "=",  ",",  "#",  "\\"};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        Advance();
        at_line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        Advance();
        continue;
      }
      if (c == '\\' && Peek(1) == '\n') {
        Advance();
        Advance();
        continue;
      }
      if (c == '/' && Peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        SkipBlockComment();
        continue;
      }
      if (c == '#') {
        if (!at_line_start) Fail("stray '#' outside a directive");
        out.push_back(LexDirective());
        at_line_start = true;
        continue;
      }
      at_line_start = false;
      if (IsIdentStart(c)) {
        out.push_back(LexWord());
      } else if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
        out.push_back(LexNumber());
      } else if (c == '"') {
        out.push_back(LexQuoted('"', TokenKind::kStringLiteral));
      } else if (c == '\'') {
        out.push_back(LexQuoted('\'', TokenKind::kCharLiteral));
      } else {
        out.push_back(LexPunctuator());
      }
    }
    return out;
  }

 private:
  char Peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (src_[pos_] == '\n') ++line_;
    ++pos_;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorKind::kLex, what + " at line " + std::to_string(line_));
  }

  Token Make(TokenKind kind, std::size_t start, int start_line) const {
    Token t{kind, std::string(src_.substr(start, pos_ - start)),
            {start, pos_, start_line, line_}};
    return t;
  }

  void SkipBlockComment() {
    int start_line = line_;
    Advance();
    Advance();
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*' && Peek(1) == '/') {
        Advance();
        Advance();
        return;
      }
      Advance();
    }
    throw Error(ErrorKind::kLex, "unterminated comment starting at line " +
                                     std::to_string(start_line));
  }

  Token LexDirective() {
    std::size_t start = pos_;
    int start_line = line_;
    Advance();  // '#'
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
      Advance();
    std::size_t word_start = pos_;
    while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
    std::string_view word = src_.substr(word_start, pos_ - word_start);
    if (word != "include") {
      Fail("unsupported preprocessor directive '#" + std::string(word) + "'");
    }
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
      Advance();
    char open = Peek(0);
    char close = open == '<' ? '>' : (open == '"' ? '"' : '\0');
    if (close == '\0') Fail("malformed #include");
    std::size_t name_start = pos_;
    Advance();
    while (pos_ < src_.size() && src_[pos_] != close && src_[pos_] != '\n')
      Advance();
    if (pos_ >= src_.size() || src_[pos_] != close) Fail("malformed #include");
    Advance();
    std::string header(src_.substr(name_start, pos_ - name_start));
    std::size_t end = pos_;
    // Trailing text on the directive line (comments were stripped earlier).
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '/' && Peek(1) == '*') {
        SkipBlockComment();
        continue;
      }
      if (src_[pos_] == '/' && Peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
        break;
      }
      if (!std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        Fail("unexpected text after #include");
      }
      Advance();
    }
    return Token{TokenKind::kIncludeDirective, "#include " + header,
                 {start, end, start_line, start_line}};
  }

  Token LexWord() {
    std::size_t start = pos_;
    int start_line = line_;
    while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
    // Wide/unicode literal prefixes glue onto the literal.
    std::string_view word = src_.substr(start, pos_ - start);
    if ((word == "L" || word == "u" || word == "U" || word == "u8") &&
        (Peek(0) == '"' || Peek(0) == '\'')) {
      char q = Peek(0);
      Token lit = LexQuoted(q, q == '"' ? TokenKind::kStringLiteral
                                        : TokenKind::kCharLiteral);
      lit.text = std::string(word) + lit.text;
      lit.span.byte_start = start;
      lit.span.line_start = start_line;
      return lit;
    }
    return Make(IsKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
                start, start_line);
  }

  Token LexNumber() {
    std::size_t start = pos_;
    int start_line = line_;
    bool is_hex = src_[pos_] == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    bool is_float = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if ((c == 'e' || c == 'E') && !is_hex && (Peek(1) == '+' || Peek(1) == '-')) {
        is_float = true;
        Advance();
        Advance();
        continue;
      }
      if ((c == 'p' || c == 'P') && is_hex && (Peek(1) == '+' || Peek(1) == '-')) {
        is_float = true;
        Advance();
        Advance();
        continue;
      }
      if (c == '.') {
        is_float = true;
        Advance();
        continue;
      }
      if (!IsIdentChar(c)) break;
      if (!is_hex && (c == 'e' || c == 'E')) is_float = true;
      Advance();
    }
    return Make(is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral,
                start, start_line);
  }

  Token LexQuoted(char quote, TokenKind kind) {
    std::size_t start = pos_;
    int start_line = line_;
    Advance();
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw Error(ErrorKind::kLex,
                    std::string(kind == TokenKind::kStringLiteral
                                    ? "unterminated string literal"
                                    : "unterminated character literal") +
                        " at line " + std::to_string(start_line));
      }
      char c = src_[pos_];
      if (c == '\\') {
        Advance();
        if (pos_ < src_.size()) Advance();
        continue;
      }
      Advance();
      if (c == quote) break;
    }
    return Make(kind, start, start_line);
  }

  Token LexPunctuator() {
    std::size_t start = pos_;
    int start_line = line_;
    for (std::string_view p : kPunctuators) {
      if (p == "#" || p == "\\") continue;
      if (src_.substr(pos_, p.size()) == p) {
        for (std::size_t i = 0; i < p.size(); ++i) Advance();
        return Make(TokenKind::kPunctuator, start, start_line);
      }
    }
    Fail(std::string("unexpected character '") + src_[pos_] + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

std::vector<Token> Lex(std::string_view source) { return Lexer(source).Run(); }

}  // namespace anonybench::cparse
