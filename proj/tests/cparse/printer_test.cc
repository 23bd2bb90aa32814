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

#include <string>

#include <gtest/gtest.h>

#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/lexer.h"
#include "anonybench/cparse/parser.h"
#include "oracles/random_program.h"
#include "test_util.h"

namespace anonybench::cparse {
namespace {

TEST(PrinterTest, CanonicalStyle) {
  EXPECT_EQ(Print(ParseSource("int f(int x){int y;if(x){y=1;}return y;}")),
            "int f(int x) {\n"
            "    int y;\n"
            "    if (x) {\n"
            "        y = 1;\n"
            "    }\n"
            "    return y;\n"
            "}\n");
}

TEST(PrinterTest, UnbracedBodyIndentsOneLevel) {
  EXPECT_EQ(Print(ParseSource("void f(int x){int y;if(x)y=1;}")),
            "void f(int x) {\n"
            "    int y;\n"
            "    if (x)\n"
            "        y = 1;\n"
            "}\n");
}

TEST(PrinterTest, ExpressionsKeepSourceParentheses) {
  Ast ast = ParseSource("int x = (1 + 2) * -(3);");
  EXPECT_EQ(Print(ast), "int x = (1 + 2) * -(3);\n");
}

TEST(PrinterTest, TypePrinting) {
  Ast ast = ParseSource("int (*table[2])(int); const char *const s = 0;");
  std::string out = Print(ast);
  EXPECT_NE(out.find("int (*table[2])(int);"), std::string::npos) << out;
  EXPECT_NE(out.find("const char *const s = 0;"), std::string::npos) << out;
}

bool RoundTrips(const std::string& src, std::string* why) {
  Ast first = ParseSource(src);
  std::string printed = Print(first);
  Lex(printed);
  Ast second = ParseSource(printed);
  if (!StructurallyEqual(first, second)) {
    *why = "structure changed:\n" + printed;
    return false;
  }
  if (Print(second) != printed) {
    *why = "print is not a fixed point:\n" + printed;
    return false;
  }
  return true;
}

TEST(PrinterTest, RoundTripOnFixtures) {
  for (const std::string dir : {"gcd", "exec"}) {
    for (const auto& file : testing::TestdataSources(dir)) {
      std::string why;
      EXPECT_TRUE(RoundTrips(corpus::PreprocessSource(testing::ReadText(file)), &why))
          << file << ": " << why;
    }
  }
}

TEST(PrinterTest, RoundTripOnGeneratedPrograms) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    oracles::RandomProgram gen(seed);
    std::string why;
    ASSERT_TRUE(RoundTrips(oracles::RandomProgram::Render(gen.Tokens(), 0), &why))
        << "seed " << seed << ": " << why;
  }
}

TEST(PrinterTest, LayoutPerturbedPairsPrintIdentically) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    oracles::RandomProgram gen(seed);
    auto tokens = gen.Tokens();
    std::string a = oracles::RandomProgram::Render(tokens, 0);
    std::string b = oracles::RandomProgram::Render(tokens, seed * 7 + 1);
    ASSERT_NE(a, b);
    ASSERT_EQ(Print(ParseSource(a)), Print(ParseSource(b))) << "seed " << seed;
  }
}

TEST(PrinterTest, CanonicalizeMatchesPrint) {
  std::string src = corpus::PreprocessSource(testing::ReadTestdata("gcd/gcd2.c"));
  EXPECT_EQ(Canonicalize(src), Print(ParseSource(src)));
}

}  // namespace
}  // namespace anonybench::cparse
