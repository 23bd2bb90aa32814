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

#include "anonybench/attribution/confidence.h"

#include <cmath>
#include <string>

#include "anonybench/error.h"

namespace anonybench::attribution {

bool ConfidenceVector::IsValid(std::span<const double> values) {
  if (values.empty()) return false;
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v <= 0.0 || v >= 1.0) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= kSimplexTolerance;
}

ConfidenceVector::ConfidenceVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (!IsValid(values_)) {
    std::string shown;
    for (std::size_t i = 0; i < values_.size() && i < 8; ++i) {
      shown += (i ? ", " : "") + std::to_string(values_[i]);
    }
    throw Error(ErrorKind::kInput,
                "not a confidence vector in the open simplex: (" + shown + ")");
  }
}

int ConfidenceVector::Argmax() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[best]) best = i;
  }
  return static_cast<int>(best);
}

bool ConfidenceVector::ArgmaxUnique() const {
  double top = values_[static_cast<std::size_t>(Argmax())];
  int count = 0;
  for (double v : values_) count += v == top ? 1 : 0;
  return count == 1;
}

}  // namespace anonybench::attribution
