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

#ifndef ANONYBENCH_ATTRIBUTION_MODEL_H_
#define ANONYBENCH_ATTRIBUTION_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anonybench/attribution/confidence.h"
#include "anonybench/attribution/forest.h"
#include "anonybench/attribution/linear.h"
#include "anonybench/features/pipeline.h"

namespace anonybench::attribution {

enum class Learner { kForest, kLinear };

std::string_view LearnerName(Learner learner);
Learner ParseLearner(std::string_view name);

struct TrainOptions {
  Learner learner = Learner::kForest;
  ForestParams forest;
  LinearParams linear;
};

// Either learner behind one prediction interface.
class Model {
 public:
  explicit Model(ForestModel forest) : impl_(std::move(forest)) {}
  explicit Model(LinearModel linear) : impl_(std::move(linear)) {}

  Learner learner() const;
  int n_classes() const;
  int n_features() const;

  // Throws Error(kInput) on a dimension mismatch.
  ConfidenceVector Predict(std::span<const double> x) const;

  const ForestModel* forest() const { return std::get_if<ForestModel>(&impl_); }
  const LinearModel* linear() const { return std::get_if<LinearModel>(&impl_); }

 private:
  std::variant<ForestModel, LinearModel> impl_;
};

// Throws Error(kTraining) unless |x| = |y| >= 2 with at least two classes.
Model Train(const Matrix& x, std::span<const int> y, int n_classes,
            const TrainOptions& options, std::uint64_t seed);

struct SampleResult {
  ConfidenceVector confidences;
  int truth = 0;
  int predicted = 0;
  bool argmax_unique = true;
};

struct Evaluation {
  double accuracy = 0.0;
  std::vector<SampleResult> samples;
};

// Accuracy is the fraction of samples whose argmax (lowest index on ties)
// equals the true author.
Evaluation Evaluate(const Model& model, const Matrix& x, std::span<const int> y);

struct FoldSummary {
  double mean = 0.0;
  double std_dev = 0.0;  // population standard deviation
};
FoldSummary SummarizeFolds(std::span<const double> fold_accuracies);

// A trained model together with its fitted feature pipeline and the author
// list giving the meaning of each confidence index.
struct ModelBundle {
  features::FeaturePipeline pipeline;
  Model model;
  std::vector<std::string> authors;
};

inline constexpr int kModelFormatVersion = 1;

std::string ModelToJson(const ModelBundle& bundle);
ModelBundle ModelFromJson(const std::string& json);
void SaveModel(const ModelBundle& bundle, const std::filesystem::path& path);
ModelBundle LoadModel(const std::filesystem::path& path);

}  // namespace anonybench::attribution

#endif  // ANONYBENCH_ATTRIBUTION_MODEL_H_
