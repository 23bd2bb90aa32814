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


#include "anonybench/explain/highlight.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "anonybench/attribution/forest.h"
#include "anonybench/corpus/preprocess.h"
#include "anonybench/error.h"
#include "anonybench/features/analyze.h"
#include "anonybench/harness/scenario.h"
#include "anonybench/harness/synthetic.h"

namespace anonybench::explain {
namespace {

using attribution::ForestModel;
using attribution::Model;
using attribution::TreeNode;
using features::Category;
using features::FeatureId;

features::FeaturePipeline HandPipeline(std::vector<FeatureId> selected) {
  features::FeaturePipeline p;
  p.vocabulary = selected;
  std::sort(p.vocabulary.begin(), p.vocabulary.end());
  std::vector<FeatureId> ordered;
  for (const auto& id : p.vocabulary) {
    p.idf[id] = 1.0;
    ordered.push_back(id);
  }
  p.selected = ordered;
  p.fitted = true;
  return p;
}

TreeNode Leaf(std::vector<double> value) {
  TreeNode n;
  n.value = std::move(value);
  return n;
}

TEST(HighlightTest, SingleLeafGivesBiasOnly) {
  ForestModel f;
  f.n_classes = 2;
  f.n_features = 1;
  f.trees.push_back({{Leaf({6.0 / 7, 1.0 / 7})}});
  auto pipeline = HandPipeline({{Category::kKeywordFreq, "int"}});
  auto view = features::AnalyzeSource("int x;");
  RelevanceMap map = Highlight(Model(f), pipeline, view, 0);
  EXPECT_EQ(map.bias, 6.0 / 7);
  EXPECT_EQ(map.prediction, 6.0 / 7);
  EXPECT_TRUE(map.located.empty());
  EXPECT_TRUE(map.unlocated.empty());
  EXPECT_TRUE(map.absent.empty());
  EXPECT_TRUE(map.entries.empty());
}

// Root splits keyword-freq(int) at 0.1; the program's share of `int` is
// 2/13 so it takes the right branch.
TEST(HighlightTest, DepthOneTreeAttachesToIntTokens) {
  const std::string src = "int a; int f(void) { return a; }";
  auto view = features::AnalyzeSource(src);
  ASSERT_DOUBLE_EQ(view.features.weights.at({Category::kKeywordFreq, "int"}), 2.0 / 13);
  auto pipeline = HandPipeline({{Category::kKeywordFreq, "int"}, {Category::kTokenUnigram, "a"}});
  const std::size_t int_index =
      pipeline.selected[0] == FeatureId{Category::kKeywordFreq, "int"} ? 0 : 1;
  ForestModel f;
  f.n_classes = 3;
  f.n_features = 2;
  TreeNode root = Leaf({0.5, 0.3, 0.2});
  root.feature = static_cast<int>(int_index);
  root.threshold = 0.1;
  root.left = 1;
  root.right = 2;
  f.trees.push_back({{root, Leaf({0.8, 0.1, 0.1}), Leaf({0.2, 0.6, 0.2})}});
  RelevanceMap map = Highlight(Model(f), pipeline, view, 1);
  EXPECT_DOUBLE_EQ(map.bias, 0.3);
  EXPECT_DOUBLE_EQ(map.prediction, 0.6);
  ASSERT_EQ(map.located.size(), 1u);
  EXPECT_EQ(map.located[0].feature, (FeatureId{Category::kKeywordFreq, "int"}));
  EXPECT_DOUBLE_EQ(map.located[0].contribution, 0.6 - 0.3);
  ASSERT_EQ(map.entries.size(), 2u);
  for (const auto& e : map.entries) {
    EXPECT_EQ(view.text.substr(e.span.byte_start, e.span.byte_end - e.span.byte_start), "int");
    EXPECT_DOUBLE_EQ(e.relevance, 0.15);
  }
  EXPECT_NEAR(map.Total(), map.prediction, 1e-12);
}

TEST(HighlightTest, MissingFeatureGoesToAbsentBucket) {
  auto view = features::AnalyzeSource("int a;");
  auto pipeline = HandPipeline({{Category::kKeywordFreq, "while"}});
  ForestModel f;
  f.n_classes = 2;
  f.n_features = 1;
  TreeNode root = Leaf({0.5, 0.5});
  root.feature = 0;
  root.threshold = 0.01;
  root.left = 1;
  root.right = 2;
  f.trees.push_back({{root, Leaf({0.9, 0.1}), Leaf({0.1, 0.9})}});
  RelevanceMap map = Highlight(Model(f), pipeline, view, 0);
  ASSERT_EQ(map.absent.size(), 1u);
  EXPECT_DOUBLE_EQ(map.absent[0].contribution, 0.4);
  EXPECT_TRUE(map.entries.empty());
}

TEST(HighlightTest, RejectsLinearModelsAndBadTargets) {
  attribution::LinearModel lm;
  lm.n_classes = 2;
  lm.n_features = 1;
  lm.weights = {{0.0}, {0.0}};
  lm.bias = {0.0, 0.0};
  lm.feature_mean = {0.0};
  lm.feature_scale = {1.0};
  auto pipeline = HandPipeline({{Category::kKeywordFreq, "int"}});
  auto view = features::AnalyzeSource("int a;");
  try {
    Highlight(Model(lm), pipeline, view, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedExplainer);
  }
  ForestModel f;
  f.n_classes = 2;
  f.n_features = 1;
  f.trees.push_back({{Leaf({0.5, 0.5})}});
  try {
    Highlight(Model(f), pipeline, view, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParameter);
  }
}

class TrainedHighlightTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new corpus::Corpus(harness::GenerateSyntheticCorpus(5, 4, 3));
    attribution::TrainOptions options;
    options.forest.n_trees = 40;
    bundle_ = new attribution::ModelBundle(harness::TrainBundle(*corpus_, options, 2));
  }
  static void TearDownTestSuite() {
    delete bundle_;
    delete corpus_;
  }
  static corpus::Corpus* corpus_;
  static attribution::ModelBundle* bundle_;
};
corpus::Corpus* TrainedHighlightTest::corpus_ = nullptr;
attribution::ModelBundle* TrainedHighlightTest::bundle_ = nullptr;

TEST_F(TrainedHighlightTest, DecompositionIdentity) {
  for (const auto& p : corpus_->programs()) {
    auto view = features::AnalyzeSource(corpus::PreprocessSource(p.source));
    auto x = features::ApplyPipeline(bundle_->pipeline, view.features);
    auto c = bundle_->model.Predict(x).values();
    for (int t = 0; t < static_cast<int>(corpus_->authors().size()); ++t) {
      RelevanceMap map = Highlight(bundle_->model, bundle_->pipeline, view, t);
      EXPECT_NEAR(map.Total(), c[t], 1e-9);
      EXPECT_NEAR(map.prediction, c[t], 1e-12);
      double entries = 0, lines = 0, located = 0;
      for (const auto& e : map.entries) entries += e.relevance;
      for (double r : map.line_relevance) lines += r;
      for (const auto& fc : map.located) located += fc.contribution;
      EXPECT_NEAR(entries, located, 1e-12);
      EXPECT_NEAR(lines, located, 1e-12);
      for (const auto& fc : map.unlocated) EXPECT_TRUE(features::IsRegionless(fc.feature.category));
    }
  }
}

TEST_F(TrainedHighlightTest, RenderingAndJson) {
  const auto& p = corpus_->programs().front();
  auto view = features::AnalyzeSource(corpus::PreprocessSource(p.source));
  RelevanceMap map = Highlight(bundle_->model, bundle_->pipeline, view, 0);
  std::string html = RenderHtml(view.text, map, "a <b> & c");
  EXPECT_NE(html.find("<!DOCTYPE html>"), std::string::npos);
  EXPECT_NE(html.find("a &lt;b&gt; &amp; c"), std::string::npos);
  EXPECT_NE(html.find("#include &lt;"), std::string::npos);
  auto j = nlohmann::json::parse(RelevanceToJson(map));
  EXPECT_EQ(j["target_author"], 0);
  EXPECT_DOUBLE_EQ(j["prediction"].get<double>(), map.prediction);
  EXPECT_EQ(j["located"].size(), map.located.size());
  EXPECT_EQ(j["line_relevance"].size(), map.line_relevance.size());
}

}  // namespace
}  // namespace anonybench::explain
