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


#include "anonybench/attribution/linear.h"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "anonybench/attribution/model.h"

namespace anonybench::attribution {
namespace {

LinearModel ZeroModel(int classes, int features) {
  LinearModel m;
  m.n_classes = classes;
  m.n_features = features;
  m.weights.assign(classes, std::vector<double>(features, 0.0));
  m.bias.assign(classes, 0.0);
  m.feature_mean.assign(features, 0.0);
  m.feature_scale.assign(features, 1.0);
  return m;
}

TEST(LinearTest, ZeroModelIsUniform) {
  ConfidenceVector c = PredictLinear(ZeroModel(4, 3), std::vector<double>{1.0, -2.0, 5.0});
  for (double p : c.values()) EXPECT_NEAR(p, 0.25, 1e-15);
}

TEST(LinearTest, UniformModelAccuracyIsShareOfClassZero) {
  Model model(ZeroModel(3, 1));
  Matrix x = {{0}, {1}, {2}, {3}, {4}};
  std::vector<int> y = {0, 2, 0, 1, 2};
  Evaluation e = Evaluate(model, x, y);
  EXPECT_DOUBLE_EQ(e.accuracy, 2.0 / 5.0);
  for (const auto& s : e.samples) {
    EXPECT_EQ(s.predicted, 0);
    EXPECT_FALSE(s.argmax_unique);
  }
}

TEST(LinearTest, LearnsSeparableClassesDeterministically) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> noise(0.0, 0.2);
  Matrix x;
  std::vector<int> y;
  for (int i = 0; i < 90; ++i) {
    int label = i % 3;
    x.push_back({label == 0 ? 1.0 + noise(rng) : noise(rng), label == 1 ? 1.0 + noise(rng) : noise(rng)});
    y.push_back(label);
  }
  LinearModel a = TrainLinear(x, y, 3, {}, 6);
  LinearModel b = TrainLinear(x, y, 3, {}, 6);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
  int correct = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ConfidenceVector c = PredictLinear(a, x[i]);
    EXPECT_TRUE(ConfidenceVector::IsValid(c.values()));
    correct += c.Argmax() == y[i];
  }
  EXPECT_GE(correct, 85);
}

TEST(LinearTest, SaturatedLogitsStayInsideSimplex) {
  LinearModel m = ZeroModel(3, 1);
  m.weights[0][0] = 1e6;
  ConfidenceVector c = PredictLinear(m, std::vector<double>{1.0});
  for (double p : c.values()) {
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
  }
}

}  // namespace
}  // namespace anonybench::attribution
