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


#include "anonybench/features/features.h"

#include <cmath>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/lexer.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/error.h"
#include "anonybench/features/analyze.h"
#include "oracles/random_program.h"
#include "test_util.h"

namespace anonybench::features {
namespace {

FeatureVector ExtractSource(const std::string& src) {
  auto tokens = cparse::Lex(src);
  return Extract(cparse::Parse(tokens), tokens);
}

double Weight(const FeatureVector& fv, Category c, const std::string& key) {
  auto it = fv.weights.find({c, key});
  return it == fv.weights.end() ? 0.0 : it->second;
}

// `int main(){return 0;}` has 9 tokens and the tree
//   translation-unit                 0
//     function-def                   1
//       type-name                    2
//       decl-function                2
//         decl-name                  3
//       compound-stmt                2
//         return                     3
//           literal                  4
// so 8 nodes, depth sum 17 and 7 edges.
TEST(ExtractTest, TinyProgramByHand) {
  FeatureVector fv = ExtractSource("int main(){return 0;}");
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kKeywordFreq, "int"), 1.0 / 9);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kKeywordFreq, "return"), 1.0 / 9);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kTokenUnigram, "main"), 1.0 / 9);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kAstNodeFreq, "return"), 1.0 / 8);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kAstNodeFreq, "compound-stmt"), 1.0 / 8);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kAstBigram, "compound-stmt>return"), 1.0 / 7);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kAstBigram, "function-def>type-name"), 1.0 / 7);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kAstDepthMax, ""), 4.0);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kAstDepthAvg, ""), 17.0 / 8);
}

TEST(ExtractTest, AbsentKindsAreSparse) {
  FeatureVector fv = ExtractSource("int main(){return 0;}");
  EXPECT_EQ(fv.weights.count({Category::kAstNodeFreq, "if"}), 0u);
  EXPECT_EQ(fv.weights.count({Category::kKeywordFreq, "while"}), 0u);
}

// The iterative listing spells `int` five times: the gcd return type, both
// parameters, the temporary and main's return type.
TEST(ExtractTest, IntTokenCountInGcd) {
  std::string src = corpus::PreprocessSource(testing::ReadTestdata("gcd/gcd1.c"));
  FeatureVector fv = ExtractSource(src);
  EXPECT_DOUBLE_EQ(Weight(fv, Category::kTokenUnigram, "int"), 5.0 / 60);
  const auto& spans = fv.regions.at({Category::kTokenUnigram, "int"});
  ASSERT_EQ(spans.size(), 5u);
  for (const auto& s : spans) EXPECT_EQ(src.substr(s.byte_start, 3), "int");
}

void CheckInvariants(const std::string& src) {
  auto tokens = cparse::Lex(src);
  cparse::Ast ast = cparse::Parse(tokens);
  FeatureVector fv = Extract(ast, tokens);
  std::size_t nodes = 0;
  cparse::Visit(ast.root, [&](const cparse::Node&, int) { ++nodes; });
  const std::size_t edges = nodes - 1;
  double uni = 0, kinds = 0, bigrams = 0;
  for (const auto& [id, w] : fv.weights) {
    ASSERT_TRUE(std::isfinite(w)) << ToString(id);
    if (IsRegionless(id.category)) {
      EXPECT_TRUE(id.key.empty());
      EXPECT_EQ(fv.regions.count(id), 0u) << ToString(id);
      continue;
    }
    ASSERT_EQ(fv.regions.count(id), 1u) << ToString(id);
    double denominator = id.category == Category::kAstNodeFreq ? nodes
                         : id.category == Category::kAstBigram ? edges
                                                               : tokens.size();
    EXPECT_NEAR(w * denominator, static_cast<double>(fv.regions.at(id).size()), 1e-9)
        << ToString(id);
    if (id.category == Category::kTokenUnigram) uni += w;
    if (id.category == Category::kAstNodeFreq) kinds += w;
    if (id.category == Category::kAstBigram) bigrams += w;
  }
  EXPECT_NEAR(uni, 1.0, 1e-12);
  EXPECT_NEAR(kinds, 1.0, 1e-12);
  EXPECT_NEAR(bigrams, 1.0, 1e-12);
}

TEST(ExtractTest, InvariantsOnFixtures) {
  for (const std::string dir : {"gcd", "exec"}) {
    for (const auto& file : testing::TestdataSources(dir)) {
      SCOPED_TRACE(file.string());
      CheckInvariants(corpus::PreprocessSource(testing::ReadText(file)));
    }
  }
}

TEST(ExtractTest, InvariantsOnGeneratedPrograms) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SCOPED_TRACE(seed);
    oracles::RandomProgram gen(seed);
    CheckInvariants(oracles::RandomProgram::Render(gen.Tokens(), 0));
  }
}

TEST(ExtractTest, JsonListsEveryFeature) {
  FeatureVector fv = ExtractSource("int main(){return 0;}");
  auto j = nlohmann::json::parse(ToJson(fv));
  ASSERT_EQ(j["features"].size(), fv.weights.size());
  for (const auto& f : j["features"]) {
    FeatureId id{ParseCategory(f["category"].get<std::string>()), f["key"].get<std::string>()};
    EXPECT_DOUBLE_EQ(f["weight"].get<double>(), fv.weights.at(id));
  }
}

TEST(AnalyzeTest, ParsedProgramUsesCanonicalText) {
  ProgramView v = AnalyzeSource("int main(){return 0;}");
  EXPECT_TRUE(v.parsed);
  EXPECT_EQ(v.text, "int main() {\n    return 0;\n}\n");
  for (const auto& [id, spans] : v.features.regions) {
    for (const auto& s : spans) EXPECT_LE(s.byte_end, v.text.size());
  }
}

TEST(AnalyzeTest, UnparseableProgramFallsBackToLexicalFeatures) {
  const std::string src = "int f(void) { goto out; out: return 1; }";
  ProgramView v = AnalyzeSource(src);
  EXPECT_FALSE(v.parsed);
  EXPECT_EQ(v.text, src);
  for (const auto& [id, w] : v.features.weights) {
    EXPECT_TRUE(id.category == Category::kTokenUnigram || id.category == Category::kKeywordFreq)
        << ToString(id);
  }
  EXPECT_GT(v.features.weights.count({Category::kKeywordFreq, "goto"}), 0u);
}

TEST(AnalyzeTest, LexFailureThrows) {
  EXPECT_THROW(AnalyzeSource("char *s = \"open;"), Error);
}

}  // namespace
}  // namespace anonybench::features
