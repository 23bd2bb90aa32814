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

#include <algorithm>
#include <cmath>
#include <set>

#include "anonybench/error.h"
#include "anonybench/util/random.h"

namespace anonybench::attribution {

namespace {

constexpr double kProbabilityFloor = 1e-12;

void Softmax(std::vector<double>& z) {
  double hi = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - hi);
    sum += v;
  }
  for (double& v : z) v /= sum;
}

std::vector<double> Logits(const LinearModel& m, std::span<const double> xs) {
  std::vector<double> z(m.bias);
  for (std::size_t c = 0; c < z.size(); ++c) {
    const auto& w = m.weights[c];
    double acc = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) acc += w[j] * xs[j];
    z[c] += acc;
  }
  return z;
}

}  // namespace

LinearModel TrainLinear(const Matrix& x, std::span<const int> y, int n_classes,
                        const LinearParams& params, std::uint64_t seed) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::kTraining, "need at least two labelled samples");
  }
  if (std::set<int>(y.begin(), y.end()).size() < 2) {
    throw Error(ErrorKind::kTraining, "training data contains a single class");
  }
  if (params.epochs <= 0 || params.learning_rate <= 0 || params.l2 < 0) {
    throw Error(ErrorKind::kParameter, "invalid linear learner parameters");
  }
  const std::size_t n = x.size();
  const std::size_t d = x.front().size();
  const std::size_t k = static_cast<std::size_t>(n_classes);
  for (const auto& row : x) {
    if (row.size() != d) throw Error(ErrorKind::kTraining, "ragged feature matrix");
  }
  for (int label : y) {
    if (label < 0 || label >= n_classes) {
      throw Error(ErrorKind::kTraining, "label out of range");
    }
  }

  LinearModel m;
  m.params = params;
  m.seed = seed;
  m.n_classes = n_classes;
  m.n_features = static_cast<int>(d);
  m.feature_mean.assign(d, 0.0);
  m.feature_scale.assign(d, 1.0);
  for (const auto& row : x) {
    for (std::size_t j = 0; j < d; ++j) m.feature_mean[j] += row[j];
  }
  for (double& v : m.feature_mean) v /= static_cast<double>(n);
  for (std::size_t j = 0; j < d; ++j) {
    double var = 0.0;
    for (const auto& row : x) {
      double dv = row[j] - m.feature_mean[j];
      var += dv * dv;
    }
    double sd = std::sqrt(var / static_cast<double>(n));
    m.feature_scale[j] = sd > 1e-12 ? sd : 1.0;
  }
  Matrix xs(n, std::vector<double>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      xs[i][j] = (x[i][j] - m.feature_mean[j]) / m.feature_scale[j];
    }
  }

  util::Rng rng(seed);
  m.weights.assign(k, std::vector<double>(d));
  for (auto& row : m.weights) {
    for (double& w : row) w = 0.01 * rng.Gaussian();
  }
  m.bias.assign(k, 0.0);

  Matrix grad(k, std::vector<double>(d));
  std::vector<double> grad_b(k);
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    for (auto& row : grad) std::fill(row.begin(), row.end(), 0.0);
    std::fill(grad_b.begin(), grad_b.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> p = Logits(m, xs[i]);
      Softmax(p);
      p[static_cast<std::size_t>(y[i])] -= 1.0;
      for (std::size_t c = 0; c < k; ++c) {
        grad_b[c] += p[c];
        if (p[c] == 0.0) continue;
        for (std::size_t j = 0; j < d; ++j) grad[c][j] += p[c] * xs[i][j];
      }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t c = 0; c < k; ++c) {
      m.bias[c] -= params.learning_rate * grad_b[c] * inv_n;
      for (std::size_t j = 0; j < d; ++j) {
        m.weights[c][j] -= params.learning_rate *
                           (grad[c][j] * inv_n + params.l2 * m.weights[c][j]);
      }
    }
  }
  return m;
}

ConfidenceVector PredictLinear(const LinearModel& model,
                               std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.n_features) {
    throw Error(ErrorKind::kInput,
                "feature dimension " + std::to_string(x.size()) +
                    " does not match the model (" +
                    std::to_string(model.n_features) + ")");
  }
  std::vector<double> xs(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    xs[j] = (x[j] - model.feature_mean[j]) / model.feature_scale[j];
  }
  std::vector<double> p = Logits(model, xs);
  Softmax(p);
  // Keep every entry strictly inside (0, 1).
  double sum = 0.0;
  for (double& v : p) {
    v = std::max(v, kProbabilityFloor);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return ConfidenceVector(std::move(p));
}

}  // namespace anonybench::attribution
