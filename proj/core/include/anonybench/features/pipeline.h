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

#ifndef ANONYBENCH_FEATURES_PIPELINE_H_
#define ANONYBENCH_FEATURES_PIPELINE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "anonybench/features/features.h"

namespace anonybench::features {

inline constexpr int kDefaultSelectionSize = 1500;

// TF-IDF weighting and mutual-information feature selection, fitted on a
// training split only. Immutable once fitted.
struct FeaturePipeline {
  std::vector<FeatureId> vocabulary;   // sorted
  std::map<FeatureId, double> idf;     // over the whole vocabulary
  std::vector<FeatureId> selected;     // vocabulary order
  bool fitted = false;

  std::size_t dimension() const { return selected.size(); }
};

// idf(f) = ln(N / (1 + df(f))) + 1. Selection keeps the `m` features with
// the highest mutual information between presence/absence and the label
// (ties: vocabulary order). Clamps m to the vocabulary size with a warning.
FeaturePipeline FitPipeline(std::span<const FeatureVector> train,
                            std::span<const int> labels, int m,
                            std::vector<std::string>* warnings = nullptr);

// output[i] = tf(selected[i]) * idf(selected[i]); absent features are 0.
std::vector<double> ApplyPipeline(const FeaturePipeline& pipeline,
                                  const FeatureVector& fv);

// Mutual information (nats) between a binary feature and the label.
double MutualInformation(std::span<const bool> present,
                         std::span<const int> labels);

std::string PipelineToJson(const FeaturePipeline& pipeline);
FeaturePipeline PipelineFromJson(const std::string& json);

}  // namespace anonybench::features

#endif  // ANONYBENCH_FEATURES_PIPELINE_H_
