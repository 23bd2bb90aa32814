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

// End-to-end attribution experiments under anonymization.

#ifndef ANONYBENCH_HARNESS_SCENARIO_H_
#define ANONYBENCH_HARNESS_SCENARIO_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "anonybench/anonmetrics/report.h"
#include "anonybench/attribution/model.h"
#include "anonybench/corpus/corpus.h"
#include "anonybench/features/pipeline.h"
#include "anonybench/normalize/transformer.h"

namespace anonybench::harness {

// kStatic: train on original code, test on transformed code.
// kAdaptiveAugment: train and test on original plus transformed code.
// kAdaptiveTransformedOnly: train and test on transformed code.
enum class Scenario { kStatic, kAdaptiveAugment, kAdaptiveTransformedOnly };

std::string_view ScenarioName(Scenario scenario);
// Accepts "static", "adaptive-augment", "adaptive-transformed-only" and the
// short form "adaptive-xformed". Throws Error(kParameter) otherwise.
Scenario ParseScenario(std::string_view name);

// Reported whenever the runner reads a program's features or label.
struct AccessEvent {
  enum class Purpose { kFit, kEvaluate };
  int fold = 0;
  std::size_t program = 0;  // index into corpus.programs()
  Purpose purpose = Purpose::kFit;
};
using AccessObserver = std::function<void(const AccessEvent&)>;

struct ScenarioConfig {
  Scenario scenario = Scenario::kStatic;
  normalize::TransformerSpec technique;
  attribution::TrainOptions train;
  int k = 5;
  std::optional<double> eps;  // empty: 1/n
  std::uint64_t seed = 0;
  int selection_size = features::kDefaultSelectionSize;
  unsigned threads = 0;  // folds run in parallel
  // Called from worker threads; must be thread-safe when threads != 1.
  AccessObserver observer;
};

// Throws Error(kParameter) for k < 1, eps < 0, selection_size < 1, or an
// external technique in the augmenting scenario.
void ValidateConfig(const ScenarioConfig& config);

// One fold per task. Preprocessing, analysis or technique failures exclude
// the affected file (recorded in report.exclusions with stage "test" in the
// fold that tests it, and stage "train" in each fold that would have trained
// on it). Every sample is scored with k and eps; aggregates are recomputed
// from per_sample.
anonmetrics::UncertaintyReport RunScenario(const corpus::Corpus& corpus,
                                           const ScenarioConfig& config);

// RunScenario with config.scenario overridden.
anonmetrics::UncertaintyReport RunStatic(const corpus::Corpus& corpus, ScenarioConfig config);
anonmetrics::UncertaintyReport RunAdaptiveAugment(const corpus::Corpus& corpus,
                                                  ScenarioConfig config);
anonmetrics::UncertaintyReport RunAdaptiveTransformedOnly(const corpus::Corpus& corpus,
                                                          ScenarioConfig config);

// Fits the pipeline and trains on every program of `corpus` (optionally
// transformed first). Throws on any preprocessing or technique failure.
attribution::ModelBundle TrainBundle(const corpus::Corpus& corpus,
                                     const attribution::TrainOptions& options,
                                     std::uint64_t seed,
                                     int selection_size = features::kDefaultSelectionSize,
                                     const normalize::TransformerSpec& technique = {});

}  // namespace anonybench::harness

#endif  // ANONYBENCH_HARNESS_SCENARIO_H_
