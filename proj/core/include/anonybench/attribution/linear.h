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

#ifndef ANONYBENCH_ATTRIBUTION_LINEAR_H_
#define ANONYBENCH_ATTRIBUTION_LINEAR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "anonybench/attribution/confidence.h"
#include "anonybench/attribution/forest.h"

namespace anonybench::attribution {

struct LinearParams {
  double learning_rate = 0.5;
  int epochs = 200;
  double l2 = 1e-3;
};

// Multinomial logistic regression on standardized inputs.
struct LinearModel {
  Matrix weights;             // n_classes x n_features
  std::vector<double> bias;   // n_classes
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;
  LinearParams params;
  std::uint64_t seed = 0;
  int n_classes = 0;
  int n_features = 0;
};

// Full-batch gradient descent on softmax cross-entropy with L2 penalty.
LinearModel TrainLinear(const Matrix& x, std::span<const int> y, int n_classes,
                        const LinearParams& params, std::uint64_t seed);

// Softmax of the logits, mixed with a 1e-12 uniform floor so that every
// entry stays strictly inside (0, 1).
ConfidenceVector PredictLinear(const LinearModel& model,
                               std::span<const double> x);

}  // namespace anonybench::attribution

#endif  // ANONYBENCH_ATTRIBUTION_LINEAR_H_
