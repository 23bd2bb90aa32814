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


#include "anonybench/features/pipeline.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "anonybench/error.h"
#include "oracles/brute_force.h"

namespace anonybench::features {
namespace {

FeatureId Tok(const std::string& key) { return {Category::kTokenUnigram, key}; }

FeatureVector Doc(std::initializer_list<std::pair<std::string, double>> entries) {
  FeatureVector fv;
  for (const auto& [k, w] : entries) fv.weights[Tok(k)] = w;
  return fv;
}

// Four documents, two authors. `x` occurs only in author 0's documents,
// `y` is split across authors and `z` is everywhere.
std::vector<FeatureVector> FourDocs() {
  return {Doc({{"x", 0.5}, {"y", 0.25}, {"z", 0.25}}), Doc({{"x", 0.5}, {"z", 0.5}}),
          Doc({{"y", 0.5}, {"z", 0.5}}), Doc({{"z", 1.0}})};
}
const std::vector<int> kFourLabels = {0, 0, 1, 1};

TEST(FitPipelineTest, IdfFormula) {
  auto docs = FourDocs();
  FeaturePipeline p = FitPipeline(docs, kFourLabels, 10);
  EXPECT_TRUE(p.fitted);
  EXPECT_DOUBLE_EQ(p.idf.at(Tok("z")), std::log(4.0 / 5.0) + 1.0);
  EXPECT_LT(p.idf.at(Tok("z")), 1.0);
  EXPECT_DOUBLE_EQ(p.idf.at(Tok("x")), std::log(4.0 / 3.0) + 1.0);
  EXPECT_DOUBLE_EQ(p.idf.at(Tok("y")), std::log(4.0 / 3.0) + 1.0);
}

TEST(FitPipelineTest, AuthorSpecificFeatureRanksFirst) {
  auto docs = FourDocs();
  FeaturePipeline p = FitPipeline(docs, kFourLabels, 1);
  ASSERT_EQ(p.selected.size(), 1u);
  EXPECT_EQ(p.selected[0], Tok("x"));
  // Brute-force MI of the three features.
  EXPECT_NEAR(oracles::MutualInformationTable({true, true, false, false}, kFourLabels),
              std::log(2.0), 1e-12);
  EXPECT_NEAR(oracles::MutualInformationTable({true, false, true, false}, kFourLabels), 0.0,
              1e-12);
  EXPECT_NEAR(oracles::MutualInformationTable({true, true, true, true}, kFourLabels), 0.0,
              1e-12);
}

TEST(FitPipelineTest, SelectionClampsWithWarning) {
  auto docs = FourDocs();
  std::vector<std::string> warnings;
  FeaturePipeline p = FitPipeline(docs, kFourLabels, 1000, &warnings);
  EXPECT_EQ(p.selected, p.vocabulary);
  EXPECT_EQ(p.vocabulary.size(), 3u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(FitPipelineTest, RejectsBadArguments) {
  auto docs = FourDocs();
  EXPECT_THROW(FitPipeline(docs, kFourLabels, 0), Error);
  EXPECT_THROW(FitPipeline(docs, std::vector<int>{0, 0, 0, 0}, 2), Error);
  EXPECT_THROW(FitPipeline(std::span<const FeatureVector>{}, std::span<const int>{}, 2), Error);
  EXPECT_THROW(FitPipeline(docs, std::vector<int>{0, 1}, 2), Error);
}

TEST(FitPipelineTest, SelectedIsSubsetInVocabularyOrder) {
  std::mt19937_64 rng(3);
  std::vector<FeatureVector> docs(30);
  std::vector<int> labels(30);
  for (int i = 0; i < 30; ++i) {
    labels[i] = i % 3;
    for (int f = 0; f < 40; ++f) {
      if (rng() % 3 == 0 || (f % 3 == labels[i] && rng() % 2)) {
        docs[i].weights[Tok("f" + std::to_string(f))] = 1.0 / (1 + rng() % 9);
      }
    }
  }
  FeaturePipeline p = FitPipeline(docs, labels, 12);
  FeaturePipeline q = FitPipeline(docs, labels, 12);
  EXPECT_EQ(p.vocabulary, q.vocabulary);
  EXPECT_EQ(p.selected, q.selected);
  ASSERT_EQ(p.selected.size(), 12u);
  EXPECT_TRUE(std::is_sorted(p.vocabulary.begin(), p.vocabulary.end()));
  std::size_t pos = 0;
  for (const FeatureId& id : p.selected) {
    auto it = std::find(p.vocabulary.begin() + pos, p.vocabulary.end(), id);
    ASSERT_NE(it, p.vocabulary.end());
    pos = it - p.vocabulary.begin() + 1;
  }
  // Every selected feature has MI at least that of every unselected one.
  auto mi = [&](const FeatureId& id) {
    std::vector<bool> present;
    for (const auto& d : docs) present.push_back(d.weights.count(id) > 0);
    return oracles::MutualInformationTable(present, labels);
  };
  double worst_selected = 1e9;
  for (const auto& id : p.selected) worst_selected = std::min(worst_selected, mi(id));
  for (const auto& id : p.vocabulary) {
    if (std::find(p.selected.begin(), p.selected.end(), id) == p.selected.end()) {
      EXPECT_LE(mi(id), worst_selected + 1e-12) << ToString(id);
    }
  }
}

TEST(MutualInformationTest, AgreesWithContingencyTable) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const int classes = 2 + static_cast<int>(rng() % 5);
    std::vector<bool> x(n);
    std::vector<int> y(n);
    bool present[64];
    for (int i = 0; i < n; ++i) {
      x[i] = rng() % 2;
      present[i] = x[i];
      y[i] = static_cast<int>(rng() % classes);
    }
    EXPECT_NEAR(MutualInformation(std::span<const bool>(present, n), y),
                oracles::MutualInformationTable(x, y), 1e-12);
  }
}

TEST(ApplyPipelineTest, TfTimesIdf) {
  auto docs = FourDocs();
  FeaturePipeline p = FitPipeline(docs, kFourLabels, 3);
  FeatureVector probe = Doc({{"x", 0.2}, {"z", 0.8}, {"unseen", 0.5}});
  std::vector<double> v = ApplyPipeline(p, probe);
  ASSERT_EQ(v.size(), p.dimension());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const FeatureId& id = p.selected[i];
    double tf = probe.weights.count(id) ? probe.weights.at(id) : 0.0;
    EXPECT_DOUBLE_EQ(v[i], tf * p.idf.at(id));
  }
  EXPECT_EQ(ApplyPipeline(p, probe), v);
}

TEST(ApplyPipelineTest, MissingFeaturesGiveZeroVector) {
  auto docs = FourDocs();
  FeaturePipeline p = FitPipeline(docs, kFourLabels, 2);
  for (double x : ApplyPipeline(p, Doc({{"other", 1.0}}))) EXPECT_EQ(x, 0.0);
}

TEST(ApplyPipelineTest, UnfittedPipelineIsStateError) {
  try {
    ApplyPipeline(FeaturePipeline{}, Doc({{"x", 1.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kState);
  }
}

// Fitting sees only the training split: whatever the held-out documents
// and labels are, the fitted pipeline is the same.
TEST(FitPipelineTest, HeldOutDataDoesNotAffectFit) {
  auto docs = FourDocs();
  std::vector<FeatureVector> train(docs.begin(), docs.begin() + 3);
  std::vector<int> train_labels = {0, 0, 1};
  FeaturePipeline a = FitPipeline(train, train_labels, 2);
  docs[3] = Doc({{"x", 1.0}});
  FeaturePipeline b = FitPipeline(std::span<const FeatureVector>(docs.data(), 3),
                                  std::span<const int>(train_labels), 2);
  EXPECT_EQ(PipelineToJson(a), PipelineToJson(b));
}

TEST(PipelineJsonTest, RoundTrip) {
  auto docs = FourDocs();
  FeaturePipeline p = FitPipeline(docs, kFourLabels, 2);
  FeaturePipeline q = PipelineFromJson(PipelineToJson(p));
  EXPECT_EQ(q.vocabulary, p.vocabulary);
  EXPECT_EQ(q.selected, p.selected);
  EXPECT_EQ(q.idf, p.idf);
  EXPECT_TRUE(q.fitted);
  EXPECT_THROW(PipelineFromJson("{\"bogus\": 1}"), Error);
}

}  // namespace
}  // namespace anonybench::features
