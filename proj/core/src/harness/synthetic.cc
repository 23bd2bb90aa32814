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

#include "anonybench/harness/synthetic.h"

#include <array>
#include <cctype>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "anonybench/error.h"
#include "anonybench/util/random.h"

namespace anonybench::harness {
namespace {

// Identifier roles, one dictionary per vocabulary.
enum Role { kI, kJ, kN, kAcc, kArr, kTmp, kRes, kStr, kFlag, kA, kB, kRoles };

constexpr std::array<std::array<const char*, kRoles>, 12> kVocabularies = {{
    {"i", "j", "n", "sum", "arr", "tmp", "res", "s", "flag", "a", "b"},
    {"idx", "jdx", "count", "total", "data", "temp", "result", "text", "found", "x", "y"},
    {"k", "m", "len", "acc", "values", "t", "out", "str", "ok", "p", "q"},
    {"ii", "jj", "size", "accum", "nums", "swp", "answer", "msg", "is_ok", "lhs", "rhs"},
    {"loopIndex", "innerIndex", "itemCount", "runningTotal", "numbers", "scratch",
     "finalValue", "inputText", "isFound", "first", "second"},
    {"c", "d", "num", "tot", "v", "w", "r", "line", "f", "u", "z"},
    {"pos", "inner", "length", "aggregate", "items", "hold", "ret", "buffer", "hit", "left",
     "right"},
    {"nIdx", "nInner", "nCount", "nSum", "anValues", "nTmp", "nResult", "szText", "bFound", "nA",
     "nB"},
    {"indx", "indx2", "limit", "cumulative", "table", "spare", "output", "phrase", "match",
     "alpha", "beta"},
    {"q1", "q2", "qn", "qsum", "qarr", "qtmp", "qres", "qstr", "qflag", "qa", "qb"},
    {"it", "jt", "cnt", "sm", "vec", "aux", "val", "sv", "chk", "m1", "m2"},
    {"row", "col", "bound", "tally", "list", "keep", "prod", "word", "seen", "num1", "num2"},
}};

constexpr std::array<const char*, 6> kHelperPatterns = {"%s_of", "calc_%s", "get%S",
                                                        "%s_fn", "do_%s", "Compute%S"};
constexpr std::array<const char*, 3> kIntSpellings = {"int", "signed", "signed int"};
constexpr std::array<const char*, 5> kWideSpellings = {"long", "long int", "long long",
                                                       "signed long", "long long int"};
constexpr std::array<const char*, 4> kMainSignatures = {
    "int main(void)", "int main()", "int main(int argc, char **argv)",
    "int main(int argc, char *argv[])"};
constexpr int kResultFormats = 4;
constexpr int kNewlineStyles = 3;
constexpr int kElementFormats = 3;
constexpr std::array<std::array<const char*, 2>, 4> kIncludeSets = {{
    {"stdio.h", nullptr},
    {"stdio.h", "stdlib.h"},
    {"stdlib.h", "stdio.h"},
    {"stdio.h", "string.h"},
}};

constexpr std::array<const char*, kTaskTemplates> kTaskNames = {
    "array_sum", "gcd", "vowels", "maximum", "fibonacci",
    "reverse",   "primes", "sort", "factorial", "digit_sum"};

std::string Upper1(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::vector<int> Dimensions(const StyleProfile& p) {
  return {p.vocabulary,       p.helper_naming,       p.int_spelling,   p.wide_spelling,
          p.braces,           p.compound_assign,     p.increment,      p.main_signature,
          p.explicit_return,  p.multidecl,           p.extra_parens,   p.comma_statements,
          p.use_switch,       p.loop_style,          p.result_format,  p.newline_style,
          p.element_format,   p.include_set,         p.explicit_compare, p.use_helpers,
          p.global_data,      p.use_ternary,         p.indent,         p.allman};
}

// Emits one program. Weak habits are re-drawn per decision point.
class Writer {
 public:
  Writer(const StyleProfile& p, std::uint64_t seed) : p_(p), rng_(seed) {
    constexpr int kCount = static_cast<int>(kVocabularies.size());
    if (p.vocabulary >= kCount) suffix_ = "_" + std::to_string(p.vocabulary / kCount);
  }

  // --- names and spellings ---
  std::string Name(Role r) const {
    return kVocabularies[static_cast<std::size_t>(p_.vocabulary) % kVocabularies.size()][r] +
           suffix_;
  }
  std::string Helper(const std::string& stem) const {
    std::string pattern = kHelperPatterns[p_.helper_naming];
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] == '%' && i + 1 < pattern.size()) {
        out += pattern[i + 1] == 'S' ? Upper1(stem) : stem;
        ++i;
      } else {
        out += pattern[i];
      }
    }
    return out + suffix_;
  }
  std::string Int() const { return kIntSpellings[p_.int_spelling]; }
  std::string Wide() const { return kWideSpellings[p_.wide_spelling]; }
  std::string WideFormat() const {
    return std::string(Wide()).find("long long") != std::string::npos ? "%lld" : "%ld";
  }

  bool Weak(bool preferred) { return rng_.Bernoulli(p_.consistency) ? preferred : !preferred; }
  int Weak(int preferred, int n) {
    if (n <= 1 || rng_.Bernoulli(p_.consistency)) return preferred;
    int other = static_cast<int>(rng_.Below(static_cast<std::uint64_t>(n - 1)));
    return other >= preferred ? other + 1 : other;
  }

  // --- layout ---
  void Raw(const std::string& s) { out_ += s + "\n"; }
  void Line(const std::string& s) { out_ += Indent() + s + "\n"; }
  void Open(const std::string& head) {
    if (p_.allman) {
      Line(head);
      Line("{");
    } else {
      Line(head + " {");
    }
    ++depth_;
  }
  void Close(const std::string& tail = "") {
    --depth_;
    Line("}" + tail);
  }
  // `else` continuation after Close without a newline in K&R style.
  void Else(const std::string& head = "else") {
    if (p_.allman) {
      Close();
      Open(head);
    } else {
      --depth_;
      Line("} " + head + " {");
      ++depth_;
    }
  }
  // A control statement with a single-statement body.
  void Single(const std::string& head, const std::string& stmt) {
    if (p_.braces) {
      Open(head);
      Line(stmt);
      Close();
    } else {
      Line(head);
      ++depth_;
      Line(stmt);
      --depth_;
    }
  }
  void Comment(const std::string& text) {
    switch (p_.comment_style) {
      case 1: Line("// " + text); break;
      case 2: Line("/* " + text + " */"); break;
      default: break;
    }
  }

  // --- statements ---
  std::string Paren(const std::string& e) const { return p_.extra_parens ? "(" + e + ")" : e; }
  std::string Return(const std::string& e) const { return "return " + Paren(e) + ";"; }
  std::string Cond(const std::string& e) const { return "(" + Paren(e) + ")"; }
  std::string Truth(const std::string& e) {
    return Weak(p_.explicit_compare) ? e + " != 0" : e;
  }
  std::string Inc(const std::string& v) {
    int style = p_.increment;
    if (style < 2) style = Weak(style, 2);
    switch (style) {
      case 0: return v + "++";
      case 1: return "++" + v;
      case 2: return v + " += 1";
      default: return v + " = " + v + " + 1";
    }
  }
  std::string Dec(const std::string& v) {
    int style = p_.increment;
    if (style < 2) style = Weak(style, 2);
    switch (style) {
      case 0: return v + "--";
      case 1: return "--" + v;
      case 2: return v + " -= 1";
      default: return v + " = " + v + " - 1";
    }
  }
  std::string Update(const std::string& v, const std::string& op, const std::string& e) const {
    if (p_.compound_assign) return v + " " + op + "= " + e;
    return v + " = " + v + " " + op + " " + e;
  }
  // Declarations of one type, each entry "name" or "name = init".
  void Decl(const std::string& type, const std::vector<std::string>& items) {
    if (items.empty()) return;
    if (p_.multidecl) {
      std::string s = type + " ";
      for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
      Line(s + ";");
    } else {
      for (const std::string& it : items) Line(type + " " + it + ";");
    }
  }
  // Two assignments, optionally fused with the comma operator.
  void Pair(const std::string& a, const std::string& b) {
    if (p_.comma_statements) {
      Line(a + ", " + b + ";");
    } else {
      Line(a + ";");
      Line(b + ";");
    }
  }

  // Counting loop v in [from, to); the caller declares v.
  template <typename Body>
  void Loop(const std::string& v, const std::string& from, const std::string& to, Body body) {
    int style = Weak(p_.loop_style, 3);
    if (style == 2) {
      Line(v + " = " + from + ";");
      Open("while (" + v + " < " + to + ")");
      body();
      Line(Inc(v) + ";");
      Close();
      return;
    }
    std::string init = style == 1 ? Int() + " " + v + " = " + from : v + " = " + from;
    Open("for (" + init + "; " + v + " < " + to + "; " + Inc(v) + ")");
    body();
    Close();
  }
  // Loop with a single statement body, honouring the brace habit.
  void LoopSingle(const std::string& v, const std::string& from, const std::string& to,
                  const std::string& stmt) {
    int style = Weak(p_.loop_style, 3);
    if (style == 2) {
      Line(v + " = " + from + ";");
      Open("while (" + v + " < " + to + ")");
      Line(stmt);
      Line(Inc(v) + ";");
      Close();
      return;
    }
    std::string init = style == 1 ? Int() + " " + v + " = " + from : v + " = " + from;
    Single("for (" + init + "; " + v + " < " + to + "; " + Inc(v) + ")", stmt);
  }
  // --- output ---
  void PrintResult(const std::string& fmt, const std::string& e) {
    switch (Weak(p_.result_format, kResultFormats)) {
      case 0: Line("printf(\"" + fmt + "\\n\", " + e + ");"); break;
      case 1: Line("printf(\"result = " + fmt + "\\n\", " + e + ");"); break;
      case 2:
        Line("printf(\"" + fmt + "\", " + e + ");");
        Newline();
        break;
      default: Line("printf(\"Answer: " + fmt + "\\n\", " + e + ");"); break;
    }
  }
  void PrintElement(const std::string& e) {
    switch (Weak(p_.element_format, kElementFormats)) {
      case 0: Line("printf(\"%d \", " + e + ");"); break;
      case 1: Line("printf(\" %d\", " + e + ");"); break;
      default: Line("printf(\"%d,\", " + e + ");"); break;
    }
  }
  void Newline() {
    switch (Weak(p_.newline_style, kNewlineStyles)) {
      case 0: Line("printf(\"\\n\");"); break;
      case 1: Line("putchar('\\n');"); break;
      default: Line("puts(\"\");"); break;
    }
  }

  // --- program frame ---
  void Includes() {
    int set = Weak(p_.include_set, static_cast<int>(kIncludeSets.size()));
    for (const char* h : kIncludeSets[set]) {
      if (h) Raw(std::string("#include <") + h + ">");
    }
    Raw("");
  }
  void OpenMain() { Open(kMainSignatures[p_.main_signature]); }
  void CloseMain() {
    if (p_.explicit_return) Line("return 0;");
    Close();
  }

  bool helpers() const { return p_.use_helpers; }
  bool ternary() { return Weak(p_.use_ternary); }
  bool global_data() const { return p_.global_data; }
  bool use_switch() const { return p_.use_switch; }
  bool compound() const { return p_.compound_assign; }
  int depth() const { return depth_; }
  std::string str() const { return out_; }

 private:
  std::string Indent() const {
    if (p_.indent == 0) return std::string(static_cast<std::size_t>(depth_), '\t');
    return std::string(static_cast<std::size_t>(depth_ * p_.indent), ' ');
  }

  const StyleProfile& p_;
  std::string suffix_;
  util::Rng rng_;
  std::string out_;
  int depth_ = 0;
};

std::string IntList(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

// Array data either global or local; returns nothing, declares `arr`.
void DataArray(Writer& w, const std::string& type, const std::string& name,
               const std::vector<int>& values, bool global) {
  std::string decl = type + " " + name + "[" + std::to_string(values.size()) + "] = " +
                     IntList(values) + ";";
  if (global) {
    w.Raw("static " + decl);
    w.Raw("");
  } else {
    w.Line(decl);
  }
}

const std::vector<int>& SumData() {
  static const std::vector<int> v = {12, 7, 33, 5, 18, 2, 41, 9};
  return v;
}

void TaskArraySum(Writer& w) {
  std::string i = w.Name(kI), n = w.Name(kN), acc = w.Name(kAcc), arr = w.Name(kArr),
              res = w.Name(kRes);
  const auto& data = SumData();
  w.Includes();
  if (w.global_data()) DataArray(w, w.Int(), arr, data, true);
  if (w.helpers()) {
    w.Comment("adds up the first n values");
    w.Open(w.Wide() + " " + w.Helper("sum") + "(const " + w.Int() + " *" + arr + ", " +
           w.Int() + " " + n + ")");
    w.Decl(w.Wide(), {acc + " = 0"});
    w.Decl(w.Int(), {i});
    w.LoopSingle(i, "0", n, w.Update(acc, "+", arr + "[" + i + "]") + ";");
    w.Line(w.Return(acc));
    w.Close();
    w.Raw("");
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Wide(), {res + " = " + w.Helper("sum") + "(" + arr + ", " +
                          std::to_string(data.size()) + ")"});
  } else {
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {i, n + " = " + std::to_string(data.size())});
    w.Decl(w.Wide(), {res + " = 0"});
    w.LoopSingle(i, "0", n, w.Update(res, "+", arr + "[" + i + "]") + ";");
  }
  w.PrintResult(w.WideFormat(), res);
  w.CloseMain();
}

void TaskGcd(Writer& w) {
  std::string i = w.Name(kI), a = w.Name(kA), b = w.Name(kB), t = w.Name(kTmp),
              arr = w.Name(kArr), res = w.Name(kRes), n = w.Name(kN);
  const std::vector<int> xs = {252, 48, 17, 1071, 81};
  const std::vector<int> ys = {105, 18, 5, 462, 27};
  w.Includes();
  std::string gcd = w.Helper("gcd");
  bool recursive = w.ternary();
  w.Open(w.Int() + " " + gcd + "(" + w.Int() + " " + a + ", " + w.Int() + " " + b + ")");
  if (recursive) {
    w.Line(w.Return(b + " == 0 ? " + a + " : " + gcd + "(" + b + ", " + a + " % " + b + ")"));
  } else {
    w.Open("while " + w.Cond(w.Truth(b)));
    w.Decl(w.Int(), {t + " = " + b});
    w.Pair(b + " = " + a + " % " + b, a + " = " + t);
    w.Close();
    w.Line(w.Return(a));
  }
  w.Close();
  w.Raw("");
  if (w.global_data()) {
    DataArray(w, w.Int(), arr, xs, true);
    DataArray(w, w.Int(), arr + "2", ys, true);
  }
  w.OpenMain();
  if (!w.global_data()) {
    DataArray(w, w.Int(), arr, xs, false);
    DataArray(w, w.Int(), arr + "2", ys, false);
  }
  w.Decl(w.Int(), {i, n + " = " + std::to_string(xs.size())});
  w.Loop(i, "0", n, [&] {
    w.Decl(w.Int(), {res + " = " + gcd + "(" + arr + "[" + i + "], " + arr + "2[" + i + "])"});
    w.PrintResult("%d", res);
  });
  w.CloseMain();
}

void TaskVowels(Writer& w) {
  std::string i = w.Name(kI), s = w.Name(kStr), cnt = w.Name(kN), c = w.Name(kTmp);
  const std::string text = "the quick brown fox jumps over a lazy dog";
  w.Includes();
  auto body = [&] {
    w.Decl("char", {c + " = " + s + "[" + i + "]"});
    if (w.use_switch()) {
      w.Open("switch (" + c + ")");
      for (const char* v : {"a", "e", "i", "o"}) w.Line(std::string("case '") + v + "':");
      w.Line("case 'u':");
      w.Line("    " + w.Inc(cnt) + ";");
      w.Line("    break;");
      w.Line("default:");
      w.Line("    break;");
      w.Close();
    } else {
      w.Single("if (" + c + " == 'a' || " + c + " == 'e' || " + c + " == 'i' || " + c +
                   " == 'o' || " + c + " == 'u')",
               w.Inc(cnt) + ";");
    }
  };
  auto scan = [&] {
    w.Decl(w.Int(), {i, cnt + " = 0"});
    if (w.Weak(true)) {
      w.Line(i + " = 0;");
      w.Open("while " + w.Cond(s + "[" + i + "] != '\\0'"));
      body();
      w.Line(w.Inc(i) + ";");
      w.Close();
    } else {
      w.Open("for (" + i + " = 0; " + s + "[" + i + "]; " + w.Inc(i) + ")");
      body();
      w.Close();
    }
  };
  if (w.helpers()) {
    w.Comment("counts lowercase vowels");
    w.Open(w.Int() + " " + w.Helper("vowels") + "(const char *" + s + ")");
    scan();
    w.Line(w.Return(cnt));
    w.Close();
    w.Raw("");
    w.OpenMain();
    w.PrintResult("%d", w.Helper("vowels") + "(\"" + text + "\")");
  } else {
    w.OpenMain();
    w.Decl("const char", {"*" + s + " = \"" + text + "\""});
    scan();
    w.PrintResult("%d", cnt);
  }
  w.CloseMain();
}

void TaskMaximum(Writer& w) {
  std::string i = w.Name(kI), n = w.Name(kN), arr = w.Name(kArr), res = w.Name(kRes);
  const std::vector<int> data = {14, -3, 27, 8, 27, 19, -11, 6, 22};
  w.Includes();
  if (w.global_data()) DataArray(w, w.Int(), arr, data, true);
  auto scan = [&] {
    w.Decl(w.Int(), {i, res + " = " + arr + "[0]"});
    w.Loop(i, "1", n, [&] {
      if (w.ternary()) {
        w.Line(res + " = " + arr + "[" + i + "] > " + res + " ? " + arr + "[" + i + "] : " +
               res + ";");
      } else {
        w.Single("if (" + arr + "[" + i + "] > " + res + ")", res + " = " + arr + "[" + i +
                                                              "];");
      }
    });
  };
  if (w.helpers()) {
    w.Open(w.Int() + " " + w.Helper("max") + "(const " + w.Int() + " *" + arr + ", " + w.Int() +
           " " + n + ")");
    scan();
    w.Line(w.Return(res));
    w.Close();
    w.Raw("");
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.PrintResult("%d", w.Helper("max") + "(" + arr + ", " + std::to_string(data.size()) + ")");
  } else {
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {n + " = " + std::to_string(data.size())});
    scan();
    w.PrintResult("%d", res);
  }
  w.CloseMain();
}

void TaskFibonacci(Writer& w) {
  std::string i = w.Name(kI), n = w.Name(kN), a = w.Name(kA), b = w.Name(kB), t = w.Name(kTmp);
  w.Includes();
  auto emit = [&] {
    w.Decl(w.Wide(), {a + " = 0", b + " = 1", t});
    w.Decl(w.Int(), {i});
    w.Loop(i, "0", n, [&] {
      w.Line("printf(\"" + w.WideFormat() + " \", " + a + ");");
      w.Line(t + " = " + a + " + " + b + ";");
      w.Pair(a + " = " + b, b + " = " + t);
    });
    w.Newline();
  };
  if (w.helpers()) {
    w.Open("void " + w.Helper("fib") + "(" + w.Int() + " " + n + ")");
    emit();
    w.Close();
    w.Raw("");
    w.OpenMain();
    w.Line(w.Helper("fib") + "(15);");
  } else {
    w.OpenMain();
    w.Decl(w.Int(), {n + " = 15"});
    emit();
  }
  w.CloseMain();
}

void TaskReverse(Writer& w) {
  std::string i = w.Name(kI), j = w.Name(kJ), n = w.Name(kN), arr = w.Name(kArr),
              t = w.Name(kTmp);
  const std::vector<int> data = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3};
  w.Includes();
  if (w.global_data()) DataArray(w, w.Int(), arr, data, true);
  auto reverse = [&] {
    w.Decl(w.Int(), {i + " = 0", j + " = " + n + " - 1", t});
    w.Open("while (" + i + " < " + j + ")");
    w.Line(t + " = " + arr + "[" + i + "];");
    w.Line(arr + "[" + i + "] = " + arr + "[" + j + "];");
    w.Line(arr + "[" + j + "] = " + t + ";");
    w.Pair(w.Inc(i), w.Dec(j));
    w.Close();
  };
  if (w.helpers()) {
    w.Open("void " + w.Helper("reverse") + "(" + w.Int() + " *" + arr + ", " + w.Int() + " " +
           n + ")");
    reverse();
    w.Close();
    w.Raw("");
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {i, n + " = " + std::to_string(data.size())});
    w.Line(w.Helper("reverse") + "(" + arr + ", " + n + ");");
  } else {
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {n + " = " + std::to_string(data.size())});
    reverse();
  }
  w.Loop(i, "0", n, [&] { w.PrintElement(w.Name(kArr) + "[" + i + "]"); });
  w.Newline();
  w.CloseMain();
}

void TaskPrimes(Writer& w) {
  std::string i = w.Name(kI), j = w.Name(kJ), n = w.Name(kN), cnt = w.Name(kAcc),
              flag = w.Name(kFlag);
  w.Includes();
  auto test = [&](const std::string& v) {
    w.Decl(w.Int(), {flag + " = 1"});
    w.Open("for (" + j + " = 2; " + j + " * " + j + " <= " + v + "; " + w.Inc(j) + ")");
    w.Open("if (" + v + " % " + j + " == 0)");
    w.Line(flag + " = 0;");
    w.Line("break;");
    w.Close();
    w.Close();
  };
  if (w.helpers()) {
    std::string isp = w.Helper("prime");
    w.Open(w.Int() + " " + isp + "(" + w.Int() + " " + n + ")");
    w.Decl(w.Int(), {j});
    w.Single("if " + w.Cond(n + " < 2"), "return 0;");
    test(n);
    w.Line(w.Return(flag));
    w.Close();
    w.Raw("");
    w.OpenMain();
    w.Decl(w.Int(), {i, cnt + " = 0"});
    w.LoopSingle(i, "0", "100", "if (" + w.Truth(isp + "(" + i + ")") + ") " + w.Inc(cnt) + ";");
  } else {
    w.OpenMain();
    w.Decl(w.Int(), {i, j, cnt + " = 0"});
    w.Loop(i, "2", "100", [&] {
      test(i);
      w.Single("if " + w.Cond(w.Truth(flag)), w.Inc(cnt) + ";");
    });
  }
  w.PrintResult("%d", cnt);
  w.CloseMain();
}

void TaskSort(Writer& w) {
  std::string i = w.Name(kI), j = w.Name(kJ), n = w.Name(kN), arr = w.Name(kArr),
              t = w.Name(kTmp);
  const std::vector<int> data = {29, 10, 14, 37, 13, 5, 42, 8};
  w.Includes();
  if (w.global_data()) DataArray(w, w.Int(), arr, data, true);
  auto sort = [&] {
    w.Decl(w.Int(), {i, j, t});
    w.Loop(i, "0", n + " - 1", [&] {
      w.Loop(j, "0", n + " - 1 - " + i, [&] {
        w.Open("if (" + arr + "[" + j + "] > " + arr + "[" + j + " + 1])");
        w.Line(t + " = " + arr + "[" + j + "];");
        w.Line(arr + "[" + j + "] = " + arr + "[" + j + " + 1];");
        w.Line(arr + "[" + j + " + 1] = " + t + ";");
        w.Close();
      });
    });
  };
  if (w.helpers()) {
    w.Open("void " + w.Helper("sort") + "(" + w.Int() + " *" + arr + ", " + w.Int() + " " + n +
           ")");
    sort();
    w.Close();
    w.Raw("");
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {i, n + " = " + std::to_string(data.size())});
    w.Line(w.Helper("sort") + "(" + arr + ", " + n + ");");
  } else {
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {n + " = " + std::to_string(data.size())});
    sort();
  }
  w.Loop(i, "0", n, [&] { w.PrintElement(arr + "[" + i + "]"); });
  w.Newline();
  w.CloseMain();
}

void TaskFactorial(Writer& w) {
  std::string i = w.Name(kI), n = w.Name(kN), acc = w.Name(kAcc), res = w.Name(kRes);
  w.Includes();
  std::string fact = w.Helper("fact");
  if (w.helpers()) {
    bool recursive = w.ternary();
    w.Open(w.Wide() + " " + fact + "(" + w.Int() + " " + n + ")");
    if (recursive) {
      w.Line(w.Return(n + " <= 1 ? 1 : " + n + " * " + fact + "(" + n + " - 1)"));
    } else {
      w.Decl(w.Wide(), {acc + " = 1"});
      w.Decl(w.Int(), {i});
      w.LoopSingle(i, "2", n + " + 1", w.Update(acc, "*", i) + ";");
      w.Line(w.Return(acc));
    }
    w.Close();
    w.Raw("");
    w.OpenMain();
    w.Decl(w.Int(), {i});
    w.Loop(i, "1", "13", [&] { w.PrintResult(w.WideFormat(), fact + "(" + i + ")"); });
  } else {
    w.OpenMain();
    w.Decl(w.Int(), {i});
    w.Decl(w.Wide(), {res + " = 1"});
    w.Loop(i, "1", "13", [&] {
      w.Line(w.Update(res, "*", i) + ";");
      w.PrintResult(w.WideFormat(), res);
    });
  }
  w.CloseMain();
}

void TaskDigitSum(Writer& w) {
  std::string i = w.Name(kI), n = w.Name(kN), arr = w.Name(kArr), acc = w.Name(kAcc),
              v = w.Name(kTmp);
  const std::vector<int> data = {9875, 12, 40001, 777, 31415};
  w.Includes();
  if (w.global_data()) DataArray(w, w.Int(), arr, data, true);
  auto digits = [&](const std::string& x) {
    w.Decl(w.Int(), {acc + " = 0"});
    w.Open("while " + w.Cond(x + " > 0"));
    w.Line(w.Update(acc, "+", x + " % 10") + ";");
    w.Line(w.Update(x, "/", "10") + ";");
    w.Close();
  };
  if (w.helpers()) {
    w.Open(w.Int() + " " + w.Helper("digits") + "(" + w.Int() + " " + v + ")");
    digits(v);
    w.Line(w.Return(acc));
    w.Close();
    w.Raw("");
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {i, n + " = " + std::to_string(data.size())});
    w.Loop(i, "0", n, [&] {
      w.PrintResult("%d", w.Helper("digits") + "(" + arr + "[" + i + "])");
    });
  } else {
    w.OpenMain();
    if (!w.global_data()) DataArray(w, w.Int(), arr, data, false);
    w.Decl(w.Int(), {i, n + " = " + std::to_string(data.size())});
    w.Loop(i, "0", n, [&] {
      w.Decl(w.Int(), {v + " = " + arr + "[" + i + "]"});
      digits(v);
      w.PrintResult("%d", acc);
    });
  }
  w.CloseMain();
}

StyleProfile RandomProfile(int author, util::Rng& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng.Below(static_cast<std::uint64_t>(n))); };
  StyleProfile p;
  p.vocabulary = author;
  p.helper_naming = pick(static_cast<int>(kHelperPatterns.size()));
  p.int_spelling = pick(static_cast<int>(kIntSpellings.size()));
  p.wide_spelling = pick(static_cast<int>(kWideSpellings.size()));
  p.braces = rng.Bernoulli(0.5);
  p.compound_assign = rng.Bernoulli(0.5);
  p.increment = pick(4);
  p.main_signature = pick(static_cast<int>(kMainSignatures.size()));
  p.explicit_return = rng.Bernoulli(0.5);
  p.multidecl = rng.Bernoulli(0.5);
  p.extra_parens = rng.Bernoulli(0.4);
  p.comma_statements = rng.Bernoulli(0.3);
  p.use_switch = rng.Bernoulli(0.5);
  p.loop_style = pick(3);
  p.result_format = pick(kResultFormats);
  p.newline_style = pick(kNewlineStyles);
  p.element_format = pick(kElementFormats);
  p.include_set = pick(static_cast<int>(kIncludeSets.size()));
  p.explicit_compare = rng.Bernoulli(0.5);
  p.use_helpers = rng.Bernoulli(0.5);
  p.global_data = rng.Bernoulli(0.5);
  p.use_ternary = rng.Bernoulli(0.5);
  p.indent = std::array<int, 4>{0, 2, 4, 8}[static_cast<std::size_t>(pick(4))];
  p.allman = rng.Bernoulli(0.5);
  p.comment_style = pick(3);
  return p;
}

}  // namespace

int ProfileDistance(const StyleProfile& a, const StyleProfile& b) {
  std::vector<int> da = Dimensions(a), db = Dimensions(b);
  int d = 0;
  for (std::size_t i = 0; i < da.size(); ++i) d += da[i] != db[i];
  return d;
}

std::vector<StyleProfile> MakeProfiles(int n_authors, std::uint64_t seed) {
  if (n_authors < 1) throw Error(ErrorKind::kParameter, "need at least one author");
  util::Rng rng(seed ^ 0x5eedc0deULL);
  std::vector<StyleProfile> out;
  for (int a = 0; a < n_authors; ++a) {
    StyleProfile p;
    for (int attempt = 0;; ++attempt) {
      p = RandomProfile(a, rng);
      bool ok = true;
      for (const StyleProfile& q : out) ok = ok && ProfileDistance(p, q) >= 3;
      if (ok || attempt > 1000) break;
    }
    out.push_back(p);
  }
  return out;
}

std::string TaskName(int task) {
  if (task < 0 || task >= kTaskTemplates) {
    throw Error(ErrorKind::kParameter, "task index out of range: " + std::to_string(task));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "t%d_%s", task, kTaskNames[static_cast<std::size_t>(task)]);
  return buf;
}

std::string RenderProgram(int task, const StyleProfile& profile, std::uint64_t seed) {
  TaskName(task);
  Writer w(profile, seed);
  switch (task) {
    case 0: TaskArraySum(w); break;
    case 1: TaskGcd(w); break;
    case 2: TaskVowels(w); break;
    case 3: TaskMaximum(w); break;
    case 4: TaskFibonacci(w); break;
    case 5: TaskReverse(w); break;
    case 6: TaskPrimes(w); break;
    case 7: TaskSort(w); break;
    case 8: TaskFactorial(w); break;
    default: TaskDigitSum(w); break;
  }
  return w.str();
}

corpus::Corpus GenerateSyntheticCorpus(int n_authors, int n_tasks, std::uint64_t seed) {
  if (n_authors < 2 || n_tasks < 2) {
    throw Error(ErrorKind::kParameter, "need at least two authors and two tasks");
  }
  if (n_tasks > kTaskTemplates) {
    throw Error(ErrorKind::kParameter,
                "at most " + std::to_string(kTaskTemplates) + " tasks are available");
  }
  std::vector<StyleProfile> profiles = MakeProfiles(n_authors, seed);
  std::vector<corpus::Program> programs;
  for (int a = 0; a < n_authors; ++a) {
    char name[32];
    std::snprintf(name, sizeof name, "author%02d", a);
    for (int t = 0; t < n_tasks; ++t) {
      std::uint64_t s = util::MixSeed(seed * 1000003ULL + static_cast<std::uint64_t>(a) * 131ULL +
                                      static_cast<std::uint64_t>(t));
      programs.push_back({RenderProgram(t, profiles[static_cast<std::size_t>(a)], s), name,
                          TaskName(t), corpus::Stage::kRaw});
    }
  }
  return corpus::Corpus::Build(std::move(programs));
}

}  // namespace anonybench::harness
