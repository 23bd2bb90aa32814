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

#include "anonybench/anonmetrics/uncertainty.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "anonybench/error.h"

namespace anonybench::anonmetrics {

namespace {

void CheckArgs(std::span<const double> c, int t, int k) {
  const int n = static_cast<int>(c.size());
  if (t < 0 || t >= n) {
    throw Error(ErrorKind::kParameter, "author index " + std::to_string(t) +
                                           " outside [0, " + std::to_string(n) +
                                           ")");
  }
  if (k < 1 || k > n) {
    throw Error(ErrorKind::kParameter, "k=" + std::to_string(k) +
                                           " outside [1, " + std::to_string(n) +
                                           "]");
  }
}

}  // namespace

double Neighborhood::spread() const {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

Neighborhood Nearest(std::span<const double> c, int t, int k) {
  CheckArgs(c, t, k);
  const double ct = c[static_cast<std::size_t>(t)];
  std::vector<int> order;
  order.reserve(c.size() - 1);
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (i != t) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(c[static_cast<std::size_t>(a)] - ct) <
           std::abs(c[static_cast<std::size_t>(b)] - ct);
  });
  Neighborhood out;
  out.source_indices.push_back(t);
  out.values.push_back(ct);
  for (int j = 0; j < k - 1; ++j) {
    out.source_indices.push_back(order[static_cast<std::size_t>(j)]);
    out.values.push_back(c[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
  }
  return out;
}

double UncertaintyScore(int t, std::span<const double> c, int k) {
  return 1.0 - Nearest(c, t, k).spread();
}

bool IsKAnonymous(std::span<const double> c, int t, int k) {
  CheckArgs(c, t, k);
  const double ct = c[static_cast<std::size_t>(t)];
  int equal = 0;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (i != t && c[static_cast<std::size_t>(i)] == ct) ++equal;
  }
  const double hi = *std::max_element(c.begin(), c.end());
  const auto at_max = std::count(c.begin(), c.end(), hi);
  return equal >= k - 1 && at_max > 1;
}

bool IsKUncertain(std::span<const double> c, int t, int k, double eps) {
  if (!(eps >= 0.0)) {
    throw Error(ErrorKind::kParameter, "eps must be non-negative");
  }
  return Nearest(c, t, k).spread() <= eps;
}

double EpsilonThreshold(int n) {
  if (n < 2) {
    throw Error(ErrorKind::kParameter, "need at least two authors, got " +
                                           std::to_string(n));
  }
  return 1.0 / static_cast<double>(n);
}

double ScoreThreshold(int n) { return 1.0 - EpsilonThreshold(n); }

}  // namespace anonybench::anonmetrics
