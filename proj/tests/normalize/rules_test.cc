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

#include <map>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/lexer.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/error.h"
#include "anonybench/harness/synthetic.h"
#include "oracles/binding_resolver.h"
#include "oracles/random_program.h"
#include "test_util.h"

namespace anonybench::normalize {
namespace {

using cparse::Ast;
using cparse::ParseSource;
using cparse::Print;

std::string Apply(const std::string& src, Rule rule) {
  return Print(ApplyRule(ParseSource(src), rule));
}

TEST(RuleExamplesTest, CompoundAssignExpands) {
  EXPECT_EQ(Apply("int main(void) { int a = 0; a += 2; return a; }", Rule::kCompoundAssign),
            "int main(void) {\n"
            "    int a = 0;\n"
            "    a = a + 2;\n"
            "    return a;\n"
            "}\n");
}

TEST(RuleExamplesTest, RenamingNumbersVariables) {
  EXPECT_EQ(Apply("int main(void) { int count; return 0; }", Rule::kRenaming),
            "int main(void) {\n"
            "    int var_0;\n"
            "    return 0;\n"
            "}\n");
}

TEST(RuleExamplesTest, ParenDropsRedundantParentheses) {
  EXPECT_EQ(Apply("void f(int b, int c) { int a; a = (b + c); }", Rule::kParen),
            "void f(int b, int c) {\n"
            "    int a;\n"
            "    a = b + c;\n"
            "}\n");
}

TEST(RuleTest, ParenKeepsRequiredParentheses) {
  std::string out = Apply(
      "int f(int a, int b, int c) { a = (b + c) * c; a = b - (c - a); a = b * (c / a); "
      "a = -(b); return (a); }",
      Rule::kParen);
  EXPECT_NE(out.find("a = (b + c) * c;"), std::string::npos) << out;
  EXPECT_NE(out.find("a = b - (c - a);"), std::string::npos) << out;
  EXPECT_NE(out.find("a = b * (c / a);"), std::string::npos) << out;
  EXPECT_NE(out.find("a = -b;"), std::string::npos) << out;
  EXPECT_NE(out.find("return a;"), std::string::npos) << out;
}

TEST(RuleTest, BracesWrapEveryBody) {
  EXPECT_EQ(Apply("void f(int x) { int y; if (x) y = 1; else y = 3; while (x) x--; "
                  "do x++; while (x < 3); }",
                  Rule::kBraces),
            "void f(int x) {\n"
            "    int y;\n"
            "    if (x) {\n"
            "        y = 1;\n"
            "    } else {\n"
            "        y = 3;\n"
            "    }\n"
            "    while (x) {\n"
            "        x--;\n"
            "    }\n"
            "    do {\n"
            "        x++;\n"
            "    } while (x < 3);\n"
            "}\n");
}

TEST(RuleTest, BracesOnUnbracedIf) {
  EXPECT_EQ(Apply("void f(int x){int y;if(x)y=1;}", Rule::kBraces),
            "void f(int x) {\n"
            "    int y;\n"
            "    if (x) {\n"
            "        y = 1;\n"
            "    }\n"
            "}\n");
}

TEST(RuleTest, MultideclSplits) {
  EXPECT_EQ(Apply("int main(void) { int a = 1, *b, c[3]; return 0; }", Rule::kMultidecl),
            "int main(void) {\n"
            "    int a = 1;\n"
            "    int *b;\n"
            "    int c[3];\n"
            "    return 0;\n"
            "}\n");
}

TEST(RuleTest, CommaSplitsStatementsButNotForHeaders) {
  std::string out = Apply(
      "int main(void) { int a, b; a = 1, b = 2; for (a = 0, b = 0; a < 3; a++, b++) ; "
      "return (a = 1, b); }",
      Rule::kComma);
  EXPECT_NE(out.find("    a = 1;\n    b = 2;\n"), std::string::npos) << out;
  EXPECT_NE(out.find("for (a = 0, b = 0; a < 3; a++, b++)"), std::string::npos) << out;
  EXPECT_NE(out.find("return (a = 1, b);"), std::string::npos) << out;
}

TEST(RuleTest, Switch2IfMergesFallthroughLabels) {
  EXPECT_EQ(Apply("int f(int d) { int k = 0; switch (d) { case 0: case 2: k = 1; break; "
                  "case 7: k = 3; break; default: k = 2; } return k; }",
                  Rule::kSwitch2If),
            "int f(int d) {\n"
            "    int k = 0;\n"
            "    if (d == 0 || d == 2) {\n"
            "        k = 1;\n"
            "    } else if (d == 7) {\n"
            "        k = 3;\n"
            "    } else {\n"
            "        k = 2;\n"
            "    }\n"
            "    return k;\n"
            "}\n");
}

TEST(RuleTest, Switch2IfLeavesUnsafeSwitches) {
  // Impure scrutinee and fall-through into a non-empty case.
  for (const char* src :
       {"int f(int d) { int k = 0; switch (d++) { case 0: k = 1; break; default: k = 2; } "
        "return k; }",
        "int f(int d) { int k = 0; switch (d) { case 0: k = 1; case 1: k++; break; } "
        "return k; }"}) {
    Ast ast = ParseSource(src);
    EXPECT_TRUE(cparse::StructurallyEqual(ApplyRule(ast, Rule::kSwitch2If), ast)) << src;
  }
}

TEST(RuleTest, FlattenIfCombinesConditions) {
  EXPECT_EQ(Apply("void f(int a, int b) { int y = 0; if (a) { if (b) { y = 1; } } }",
                  Rule::kFlattenIf),
            "void f(int a, int b) {\n"
            "    int y = 0;\n"
            "    if (a && b) {\n"
            "        y = 1;\n"
            "    }\n"
            "}\n");
}

TEST(RuleTest, IfElseMovesTrailingCode) {
  EXPECT_EQ(Apply("int f(int a) { if (a) { return 1; } a = a + 1; return a; }", Rule::kIfElse),
            "int f(int a) {\n"
            "    if (a) {\n"
            "        return 1;\n"
            "    } else {\n"
            "        a = a + 1;\n"
            "        return a;\n"
            "    }\n"
            "}\n");
}

TEST(RuleTest, UnnecessaryReturnOnlyWhenNothingFollows) {
  EXPECT_EQ(Apply("void f(int a) { if (a) { a = 2; return; } }", Rule::kUnnecessaryReturn),
            "void f(int a) {\n"
            "    if (a) {\n"
            "        a = 2;\n"
            "    }\n"
            "}\n");
  Ast kept = ParseSource("void f(int a) { if (a) { a = 2; return; } a = 3; }");
  EXPECT_TRUE(cparse::StructurallyEqual(ApplyRule(kept, Rule::kUnnecessaryReturn), kept));
  Ast loop = ParseSource("void f(int a) { while (a) { if (a) { return; } a--; } }");
  EXPECT_TRUE(cparse::StructurallyEqual(ApplyRule(loop, Rule::kUnnecessaryReturn), loop));
}

TEST(RuleTest, VoidReturnAppended) {
  EXPECT_EQ(Apply("void f(int a) { a = 2; }", Rule::kVoidReturn),
            "void f(int a) {\n"
            "    a = 2;\n"
            "    return;\n"
            "}\n");
}

TEST(RuleTest, MainParamsForcesSignatureAndReturn) {
  EXPECT_EQ(Apply("int main() { return 0; }", Rule::kMainParams),
            "int main(int argc, char **argv) {\n"
            "    return 0;\n"
            "}\n");
  EXPECT_EQ(Apply("int main(void) { int x = 1; }", Rule::kMainParams),
            "int main(int argc, char **argv) {\n"
            "    int x = 1;\n"
            "    return 0;\n"
            "}\n");
}

TEST(RuleTest, TypesUseCanonicalSpellings) {
  EXPECT_EQ(Apply("long long f(short int a, unsigned b, long unsigned int c, size_t d) "
                  "{ long x = 1; return x; }",
                  Rule::kTypes),
            "long f(short a, unsigned int b, unsigned long c, unsigned long d) {\n"
            "    long x = 1;\n"
            "    return x;\n"
            "}\n");
}

TEST(RuleTest, RenamingCoversFunctionsTagsAndFields) {
  EXPECT_EQ(Apply("struct pt { int x; }; int helper(int n) { struct pt p; p.x = n; "
                  "return p.x; } int main(int argc, char **argv) { int count = helper(argc); "
                  "return count; }",
                  Rule::kRenaming),
            "struct struct_0 {\n"
            "    int field_0;\n"
            "};\n"
            "\n"
            "int func_0(int var_0) {\n"
            "    struct struct_0 var_1;\n"
            "    var_1.field_0 = var_0;\n"
            "    return var_1.field_0;\n"
            "}\n"
            "\n"
            "int main(int var_2, char **var_3) {\n"
            "    int var_4 = func_0(var_2);\n"
            "    return var_4;\n"
            "}\n");
}

TEST(RuleTest, RuleNamesParse) {
  for (Rule r : kRuleOrder) EXPECT_EQ(ParseRule(RuleName(r)), r);
  EXPECT_EQ(ParseRule("compound-assign"), Rule::kCompoundAssign);
  EXPECT_EQ(ParseRule("SWITCH2IF"), Rule::kSwitch2If);
  EXPECT_THROW(ParseRule("inline"), Error);
}

TEST(RuleTest, InapplicableRulesAreIdentity) {
  Ast ast = ParseSource("int main(int argc, char **argv) {\n    return argc;\n}\n");
  for (Rule r : {Rule::kBraces, Rule::kMultidecl, Rule::kCompoundAssign, Rule::kComma,
                 Rule::kSwitch2If, Rule::kFlattenIf, Rule::kIfElse, Rule::kUnnecessaryReturn,
                 Rule::kVoidReturn, Rule::kMainParams, Rule::kTypes, Rule::kParen}) {
    EXPECT_TRUE(cparse::StructurallyEqual(ApplyRule(ast, r), ast)) << RuleName(r);
  }
}

std::vector<std::string> Corpus() {
  std::vector<std::string> sources;
  for (const std::string dir : {"gcd", "exec"}) {
    for (const auto& f : testing::TestdataSources(dir)) {
      sources.push_back(corpus::PreprocessSource(testing::ReadText(f)));
    }
  }
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    oracles::RandomProgram gen(seed);
    sources.push_back(oracles::RandomProgram::Render(gen.Tokens(), 0));
  }
  return sources;
}

TEST(RulePropertyTest, EveryRuleOutputReparses) {
  for (const std::string& src : Corpus()) {
    Ast ast = ParseSource(src);
    for (Rule r : kRuleOrder) {
      Ast out = ApplyRule(ast, r);
      std::string printed = Print(out);
      Ast again;
      ASSERT_NO_THROW(again = ParseSource(printed)) << RuleName(r) << "\n" << printed;
      ASSERT_TRUE(cparse::StructurallyEqual(again, out)) << RuleName(r) << "\n" << printed;
    }
  }
}

TEST(RuleTest, ConvertedSwitchKeepsTheOuterElse) {
  const std::string src =
      "int f(int x, int a) { if (a) switch (x) { case 1: x = 2; break; } else x = 3; return x; }";
  Ast out = ApplyRule(ParseSource(src), Rule::kSwitch2If);
  EXPECT_EQ(Print(out),
            "int f(int x, int a) {\n"
            "    if (a) {\n"
            "        if (x == 1) {\n"
            "            x = 2;\n"
            "        }\n"
            "    } else\n"
            "        x = 3;\n"
            "    return x;\n"
            "}\n");
  EXPECT_TRUE(cparse::StructurallyEqual(ParseSource(Print(out)), out));
}

TEST(NormalizeTest, Idempotent) {
  for (const std::string& src : Corpus()) {
    Ast once = Normalize(ParseSource(src));
    Ast twice = Normalize(once);
    ASSERT_TRUE(cparse::StructurallyEqual(once, twice)) << Print(once);
    ASSERT_EQ(Print(once), NormalizeSource(src));
  }
}

TEST(NormalizeTest, IterationCapIsEnforced) {
  NormalizeOptions options;
  options.max_iterations = 1;
  // The first pass changes the program, so a single pass cannot confirm a
  // fixed point.
  try {
    Normalize(ParseSource("int main() { int a; a += 1; return 0; }"), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInternal);
  }
}

TEST(RenamingTest, AlphaEquivalentOnCorpus) {
  for (const std::string& src : Corpus()) {
    Ast ast = ParseSource(src);
    std::vector<RenameEntry> log;
    Ast renamed = RenameIdentifiers(ast, &log);
    std::string why;
    ASSERT_TRUE(oracles::AlphaEquivalent(ast.root, renamed.root, &why))
        << why << "\n" << Print(renamed);
    EXPECT_TRUE(cparse::StructurallyEqual(renamed, ApplyRule(ast, Rule::kRenaming)));
    // Distinct originals in one scope get distinct fresh names, and no fresh
    // name is reused within a scope.
    std::map<std::pair<int, std::string>, std::string> forward;
    std::map<std::pair<int, std::string>, std::string> backward;
    for (const RenameEntry& e : log) {
      auto [it, fresh] = forward.emplace(std::make_pair(e.scope, e.kind + ":" + e.original),
                                         e.renamed);
      EXPECT_EQ(it->second, e.renamed);
      auto [jt, fresh_inv] = backward.emplace(std::make_pair(e.scope, e.kind + ":" + e.renamed),
                                              e.original);
      EXPECT_EQ(jt->second, e.original) << e.renamed;
    }
  }
}

TEST(RenamingTest, OracleRejectsWrongRenaming) {
  Ast ast = ParseSource("int main(void) { int a = 1; int b = 2; printf(\"%d\", a); return a; }");
  Ast renamed = RenameIdentifiers(ast, nullptr);
  std::string why;
  ASSERT_TRUE(oracles::AlphaEquivalent(ast.root, renamed.root, &why)) << why;

  Ast rebound = renamed;
  cparse::Rewrite(rebound.root, [](cparse::Node& n) {
    if (n.kind == cparse::NodeKind::kReturn) n.child(0).text = "var_1";
  });
  EXPECT_FALSE(oracles::AlphaEquivalent(ast.root, rebound.root, &why));

  Ast free_renamed = renamed;
  cparse::Rewrite(free_renamed.root, [](cparse::Node& n) {
    if (n.kind == cparse::NodeKind::kIdentifierRef && n.text == "printf") n.text = "func_9";
  });
  EXPECT_FALSE(oracles::AlphaEquivalent(ast.root, free_renamed.root, &why));
}

TEST(RenamingTest, ShadowedNamesStayDistinct) {
  std::string src = corpus::PreprocessSource(testing::ReadTestdata("exec/e14_shadowing.c"));
  Ast ast = ParseSource(src);
  std::string why;
  EXPECT_TRUE(oracles::AlphaEquivalent(ast.root, RenameIdentifiers(ast, nullptr).root, &why))
      << why;
}

// Different authors' solutions of one task share more vocabulary after
// normalization.
TEST(NormalizeTest, UnifiesStyleAcrossAuthors) {
  corpus::Corpus c = harness::GenerateSyntheticCorpus(10, 8, 7);
  std::size_t before = 0, after = 0;
  for (const std::string& task : c.tasks()) {
    std::set<std::string> ids_before, ids_after;
    for (const auto& p : c.programs()) {
      if (p.task != task) continue;
      std::string src = corpus::PreprocessSource(p.source);
      for (const auto& t : cparse::Lex(src)) {
        if (t.kind == cparse::TokenKind::kIdentifier) ids_before.insert(t.text);
      }
      for (const auto& t : cparse::Lex(NormalizeSource(src))) {
        if (t.kind == cparse::TokenKind::kIdentifier) ids_after.insert(t.text);
      }
    }
    EXPECT_LT(ids_after.size(), ids_before.size()) << task;
    before += ids_before.size();
    after += ids_after.size();
  }
  EXPECT_LT(after * 2, before);
}

TEST(TypeTableTest, MatchesWordMultisets) {
  const TypeTable& table = Lp64TypeTable();
  EXPECT_FALSE(table.empty());
  EXPECT_EQ(Apply("long unsigned int x;", Rule::kTypes), "unsigned long x;\n");
  EXPECT_EQ(Apply("signed x;", Rule::kTypes), "int x;\n");
  NormalizeOptions custom;
  custom.types = {{"long", "int64_t"}};
  EXPECT_EQ(Print(ApplyRule(ParseSource("long x;"), Rule::kTypes, custom)), "int64_t x;\n");
}

}  // namespace
}  // namespace anonybench::normalize
