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

// The k-uncertainty formalism over a single confidence vector.
//
// All functions accept raw confidence spans rather than ConfidenceVector so
// that hand-written vectors with zero entries can be scored. Author indices are
// 0-based.

#ifndef ANONYBENCH_ANONMETRICS_UNCERTAINTY_H_
#define ANONYBENCH_ANONMETRICS_UNCERTAINTY_H_

#include <span>
#include <vector>

namespace anonybench::anonmetrics {

struct Neighborhood {
  std::vector<double> values;      // values[0] == c[t]
  std::vector<int> source_indices;  // source_indices[0] == t

  double spread() const;
};

// The k confidences nearest to c[t], ordered by (|c_i - c_t|, i) with t first.
// Throws Error(kParameter) unless 0 <= t < n and 1 <= k <= n.
Neighborhood Nearest(std::span<const double> c, int t, int k);

// u_k(t, c) = 1 - spread(N_{t,k}).
double UncertaintyScore(int t, std::span<const double> c, int k);

// At least k-1 other authors tie exactly with c[t] and argmax(c) is not unique.
bool IsKAnonymous(std::span<const double> c, int t, int k);

// spread(N_{t,k}) <= eps. Throws Error(kParameter) for eps < 0.
bool IsKUncertain(std::span<const double> c, int t, int k, double eps);

// t_eps = 1/n and the matching score threshold 1 - 1/n. n >= 2.
double EpsilonThreshold(int n);
double ScoreThreshold(int n);

}  // namespace anonybench::anonmetrics

#endif  // ANONYBENCH_ANONMETRICS_UNCERTAINTY_H_
