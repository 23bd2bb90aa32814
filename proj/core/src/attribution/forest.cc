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

#include "anonybench/attribution/forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "anonybench/error.h"
#include "anonybench/util/parallel.h"
#include "anonybench/util/random.h"

namespace anonybench::attribution {

std::vector<double> LaplaceSmoothed(std::span<const double> counts) {
  double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  const double n = static_cast<double>(counts.size());
  std::vector<double> out(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    out[c] = (counts[c] + 1.0) / (total + n);
  }
  return out;
}

const TreeNode& DecisionTree::Leaf(std::span<const double> x) const {
  const TreeNode* n = &nodes.front();
  while (!n->is_leaf()) {
    n = &nodes[static_cast<std::size_t>(
        x[static_cast<std::size_t>(n->feature)] <= n->threshold ? n->left
                                                                : n->right)];
  }
  return *n;
}

std::vector<int> DecisionTree::Path(std::span<const double> x) const {
  std::vector<int> path{0};
  int cur = 0;
  while (!nodes[static_cast<std::size_t>(cur)].is_leaf()) {
    const TreeNode& n = nodes[static_cast<std::size_t>(cur)];
    cur = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    path.push_back(cur);
  }
  return path;
}

namespace {

double Gini(std::span<const double> counts, double total) {
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (double c : counts) {
    double p = c / total;
    s += p * p;
  }
  return 1.0 - s;
}

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& x, std::span<const int> y, int n_classes,
              const ForestParams& params, int mtry, std::uint64_t seed)
      : x_(x), y_(y), n_classes_(n_classes), params_(params), mtry_(mtry),
        rng_(seed) {}

  DecisionTree Build() {
    const std::size_t n = x_.size();
    std::vector<std::size_t> sample(n);
    for (std::size_t i = 0; i < n; ++i) {
      sample[i] = static_cast<std::size_t>(rng_.Below(n));
    }
    features_.resize(x_.front().size());
    std::iota(features_.begin(), features_.end(), 0);
    Grow(sample, 0);
    return std::move(tree_);
  }

 private:
  int Grow(std::vector<std::size_t>& sample, int depth) {
    int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::vector<double> counts(static_cast<std::size_t>(n_classes_), 0.0);
    for (std::size_t i : sample) counts[static_cast<std::size_t>(y_[i])] += 1.0;
    tree_.nodes[static_cast<std::size_t>(id)].value = LaplaceSmoothed(counts);

    const double total = static_cast<double>(sample.size());
    int nonzero = 0;
    for (double c : counts) nonzero += c > 0 ? 1 : 0;
    bool can_split = nonzero > 1 &&
                     sample.size() >= static_cast<std::size_t>(params_.min_split) &&
                     (params_.max_depth <= 0 || depth < params_.max_depth);
    if (!can_split) return id;

    const double parent_gini = Gini(counts, total);
    int best_feature = -1;
    double best_threshold = 0.0;
    double best_gain = 1e-12;

    // Partial Fisher-Yates over the feature list; constant features do not
    // count towards mtry.
    int evaluated = 0;
    std::size_t remaining = features_.size();
    std::vector<std::pair<double, int>> column(sample.size());
    std::vector<double> left(counts.size());
    while (evaluated < mtry_ && remaining > 0) {
      std::size_t pick = static_cast<std::size_t>(rng_.Below(remaining));
      std::swap(features_[pick], features_[remaining - 1]);
      std::size_t f = features_[remaining - 1];
      --remaining;
      for (std::size_t k = 0; k < sample.size(); ++k) {
        column[k] = {x_[sample[k]][f], y_[sample[k]]};
      }
      auto [lo, hi] = std::minmax_element(
          column.begin(), column.end(),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      if (lo->first == hi->first) continue;
      ++evaluated;
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::fill(left.begin(), left.end(), 0.0);
      std::vector<double> right = counts;
      for (std::size_t k = 0; k + 1 < column.size(); ++k) {
        std::size_t c = static_cast<std::size_t>(column[k].second);
        left[c] += 1.0;
        right[c] -= 1.0;
        if (column[k].first == column[k + 1].first) continue;
        double nl = static_cast<double>(k + 1);
        double nr = total - nl;
        double weighted = (nl * Gini(left, nl) + nr * Gini(right, nr)) / total;
        double gain = parent_gini - weighted;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int>(f);
          best_threshold = 0.5 * (column[k].first + column[k + 1].first);
        }
      }
    }
    if (best_feature < 0) return id;

    std::vector<std::size_t> left_sample, right_sample;
    for (std::size_t i : sample) {
      (x_[i][static_cast<std::size_t>(best_feature)] <= best_threshold
           ? left_sample
           : right_sample)
          .push_back(i);
    }
    sample.clear();
    sample.shrink_to_fit();
    int l = Grow(left_sample, depth + 1);
    int r = Grow(right_sample, depth + 1);
    TreeNode& node = tree_.nodes[static_cast<std::size_t>(id)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  const Matrix& x_;
  std::span<const int> y_;
  int n_classes_;
  const ForestParams& params_;
  int mtry_;
  util::Rng rng_;
  std::vector<std::size_t> features_;
  DecisionTree tree_;
};

}  // namespace

ForestModel TrainForest(const Matrix& x, std::span<const int> y, int n_classes,
                        const ForestParams& params, std::uint64_t seed) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::kTraining, "need at least two labelled samples");
  }
  if (std::set<int>(y.begin(), y.end()).size() < 2) {
    throw Error(ErrorKind::kTraining, "training data contains a single class");
  }
  for (int label : y) {
    if (label < 0 || label >= n_classes) {
      throw Error(ErrorKind::kTraining, "label out of range");
    }
  }
  const std::size_t d = x.front().size();
  for (const auto& row : x) {
    if (row.size() != d) throw Error(ErrorKind::kTraining, "ragged feature matrix");
  }
  if (params.n_trees <= 0 || params.min_split < 2) {
    throw Error(ErrorKind::kParameter, "n_trees must be > 0 and min_split >= 2");
  }
  ForestModel model;
  model.params = params;
  model.seed = seed;
  model.n_classes = n_classes;
  model.n_features = static_cast<int>(d);
  int mtry = params.features_per_split > 0
                 ? params.features_per_split
                 : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))));
  mtry = std::max(1, mtry);
  model.trees.resize(static_cast<std::size_t>(params.n_trees));
  if (d == 0) {
    // No features: every tree is a single leaf.
    for (std::size_t t = 0; t < model.trees.size(); ++t) {
      std::vector<double> counts(static_cast<std::size_t>(n_classes), 0.0);
      util::Rng rng(seed + t);
      for (std::size_t i = 0; i < x.size(); ++i) {
        counts[static_cast<std::size_t>(y[rng.Below(x.size())])] += 1.0;
      }
      TreeNode leaf;
      leaf.value = LaplaceSmoothed(counts);
      model.trees[t].nodes.push_back(std::move(leaf));
    }
    return model;
  }
  util::ParallelFor(model.trees.size(), params.threads, [&](std::size_t t) {
    TreeBuilder builder(x, y, n_classes, params, mtry, seed + t);
    model.trees[t] = builder.Build();
  });
  return model;
}

ConfidenceVector PredictTree(const DecisionTree& tree, int n_classes,
                             std::span<const double> x) {
  const TreeNode& leaf = tree.Leaf(x);
  if (static_cast<int>(leaf.value.size()) != n_classes) {
    throw Error(ErrorKind::kInternal, "leaf distribution size mismatch");
  }
  return ConfidenceVector(leaf.value);
}

ConfidenceVector PredictForest(const ForestModel& model,
                               std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.n_features) {
    throw Error(ErrorKind::kInput,
                "feature dimension " + std::to_string(x.size()) +
                    " does not match the model (" +
                    std::to_string(model.n_features) + ")");
  }
  std::vector<double> mean(static_cast<std::size_t>(model.n_classes), 0.0);
  for (const DecisionTree& tree : model.trees) {
    const TreeNode& leaf = tree.Leaf(x);
    for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += leaf.value[c];
  }
  const double n = static_cast<double>(model.trees.size());
  for (double& v : mean) v /= n;
  return ConfidenceVector(std::move(mean));
}

}  // namespace anonybench::attribution
