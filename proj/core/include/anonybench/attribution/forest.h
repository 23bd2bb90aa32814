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

#ifndef ANONYBENCH_ATTRIBUTION_FOREST_H_
#define ANONYBENCH_ATTRIBUTION_FOREST_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anonybench/attribution/confidence.h"

namespace anonybench::attribution {

using Matrix = std::vector<std::vector<double>>;

struct ForestParams {
  int n_trees = 300;
  int max_depth = 0;           // 0 = unbounded
  int min_split = 2;
  int features_per_split = 0;  // 0 = ceil(sqrt(d))
  unsigned threads = 0;        // 0 = hardware concurrency
};

// Internal nodes route x[feature] <= threshold to `left`. Every node keeps
// the Laplace-smoothed class distribution of the training samples that
// reached it; at leaves this is the prediction, and the per-node values
// drive the path decomposition used for feature highlighting.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<double> value;

  bool is_leaf() const { return feature < 0; }
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  const TreeNode& Leaf(std::span<const double> x) const;
  // Node indices from the root to the active leaf.
  std::vector<int> Path(std::span<const double> x) const;
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  ForestParams params;
  std::uint64_t seed = 0;
  int n_classes = 0;
  int n_features = 0;
};

// Bagged CART ensemble: each tree is grown on a bootstrap sample drawn from
// seed + tree index, splitting on the best Gini reduction among
// features_per_split randomly drawn (non-constant) features.
ForestModel TrainForest(const Matrix& x, std::span<const int> y, int n_classes,
                        const ForestParams& params, std::uint64_t seed);

// Mean of the active leaves' distributions.
ConfidenceVector PredictForest(const ForestModel& model,
                               std::span<const double> x);
ConfidenceVector PredictTree(const DecisionTree& tree, int n_classes,
                             std::span<const double> x);

// (counts_c + 1) / (total + n_classes)
std::vector<double> LaplaceSmoothed(std::span<const double> counts);

}  // namespace anonybench::attribution

#endif  // ANONYBENCH_ATTRIBUTION_FOREST_H_
