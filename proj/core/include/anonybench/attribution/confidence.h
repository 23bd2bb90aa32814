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

#ifndef ANONYBENCH_ATTRIBUTION_CONFIDENCE_H_
#define ANONYBENCH_ATTRIBUTION_CONFIDENCE_H_

#include <span>
#include <vector>

namespace anonybench::attribution {

inline constexpr double kSimplexTolerance = 1e-9;

// Per-author attribution confidences: every entry strictly inside (0, 1)
// and the entries sum to 1 within kSimplexTolerance.
class ConfidenceVector {
 public:
  // Throws Error(kInput) if `values` violates the invariants.
  explicit ConfidenceVector(std::vector<double> values);

  static bool IsValid(std::span<const double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  // Lowest index among the maximal entries.
  int Argmax() const;
  bool ArgmaxUnique() const;

  friend bool operator==(const ConfidenceVector&,
                         const ConfidenceVector&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace anonybench::attribution

#endif  // ANONYBENCH_ATTRIBUTION_CONFIDENCE_H_
