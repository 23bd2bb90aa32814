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

#include "anonybench/harness/scenario.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "anonybench/anonmetrics/uncertainty.h"
#include "anonybench/corpus/preprocess.h"
#include "anonybench/error.h"
#include "anonybench/features/analyze.h"
#include "anonybench/util/parallel.h"

namespace anonybench::harness {
namespace {

using anonmetrics::Exclusion;
using anonmetrics::SampleScore;
using anonmetrics::UncertaintyReport;

struct Variant {
  bool ok = false;
  std::string reason;
  features::FeatureVector features;
};

struct Prepared {
  Variant original;
  Variant transformed;
};

enum class Which { kOriginal, kTransformed };

std::vector<Which> TrainVariants(Scenario s) {
  switch (s) {
    case Scenario::kStatic: return {Which::kOriginal};
    case Scenario::kAdaptiveAugment: return {Which::kOriginal, Which::kTransformed};
    case Scenario::kAdaptiveTransformedOnly: return {Which::kTransformed};
  }
  return {};
}

std::vector<Which> TestVariants(Scenario s) {
  if (s == Scenario::kAdaptiveAugment) return {Which::kOriginal, Which::kTransformed};
  return {Which::kTransformed};
}

Variant Analyze(const std::string& source) {
  Variant v;
  try {
    v.features = features::AnalyzeSource(source).features;
    v.ok = true;
  } catch (const Error& e) {
    v.reason = e.what();
  }
  return v;
}

Prepared Prepare(const corpus::Program& program, const ScenarioConfig& config,
                 bool need_original) {
  Prepared p;
  std::string pre;
  try {
    pre = corpus::PreprocessSource(program.source);
  } catch (const Error& e) {
    p.original.reason = p.transformed.reason = e.what();
    return p;
  }
  const bool identity = config.technique.kind == normalize::TransformerKind::kIdentity;
  if (need_original || identity) p.original = Analyze(pre);
  if (identity) {
    p.transformed = p.original;
    return p;
  }
  try {
    p.transformed = Analyze(normalize::TransformSource(pre, config.technique));
  } catch (const Error& e) {
    p.transformed.reason = e.what();
  }
  return p;
}

std::string FormatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct FoldOutput {
  std::vector<SampleScore> samples;
  std::vector<Exclusion> exclusions;
};

}  // namespace

std::string_view ScenarioName(Scenario scenario) {
  switch (scenario) {
    case Scenario::kStatic: return "static";
    case Scenario::kAdaptiveAugment: return "adaptive-augment";
    case Scenario::kAdaptiveTransformedOnly: return "adaptive-transformed-only";
  }
  return "static";
}

Scenario ParseScenario(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "static") return Scenario::kStatic;
  if (s == "adaptive-augment") return Scenario::kAdaptiveAugment;
  if (s == "adaptive-transformed-only" || s == "adaptive-xformed") {
    return Scenario::kAdaptiveTransformedOnly;
  }
  throw Error(ErrorKind::kParameter, "unknown scenario: " + std::string(name));
}

void ValidateConfig(const ScenarioConfig& config) {
  if (config.k < 1) throw Error(ErrorKind::kParameter, "k must be at least 1");
  if (config.eps && !(*config.eps >= 0.0)) {
    throw Error(ErrorKind::kParameter, "eps must be non-negative");
  }
  if (config.selection_size < 1) {
    throw Error(ErrorKind::kParameter, "selection size must be positive");
  }
  if (config.scenario == Scenario::kAdaptiveAugment && !normalize::IsBuiltin(config.technique)) {
    throw Error(ErrorKind::kParameter,
                "augmenting the training data requires a builtin technique");
  }
}

UncertaintyReport RunScenario(const corpus::Corpus& corpus, const ScenarioConfig& config) {
  ValidateConfig(config);
  const auto& programs = corpus.programs();
  const int n_authors = static_cast<int>(corpus.authors().size());
  if (n_authors < 2) throw Error(ErrorKind::kParameter, "need at least two authors");

  const bool need_original = config.scenario != Scenario::kAdaptiveTransformedOnly;
  std::vector<Prepared> prepared(programs.size());
  util::ParallelFor(programs.size(), config.threads, [&](std::size_t i) {
    prepared[i] = Prepare(programs[i], config, need_original);
  });
  std::vector<int> labels(programs.size());
  for (std::size_t i = 0; i < programs.size(); ++i) {
    labels[i] = corpus.AuthorIndex(programs[i].author);
  }

  const corpus::FoldPlan plan = corpus::GroupedKFold(corpus);
  const std::size_t n_folds = plan.folds.size();
  const unsigned fold_workers =
      std::min<unsigned>(util::ResolveThreads(config.threads), static_cast<unsigned>(n_folds));
  attribution::TrainOptions train = config.train;
  if (fold_workers > 1) train.forest.threads = 1;

  const bool identity = config.technique.kind == normalize::TransformerKind::kIdentity;
  auto variant_of = [&](std::size_t i, Which w) -> const Variant& {
    return w == Which::kOriginal ? prepared[i].original : prepared[i].transformed;
  };
  auto variant_name = [&](Which w) {
    return w == Which::kOriginal || identity ? "original" : "transformed";
  };
  auto notify = [&](int fold, std::size_t i, AccessEvent::Purpose purpose) {
    if (config.observer) config.observer({fold, i, purpose});
  };

  std::vector<FoldOutput> outputs(n_folds);
  util::ParallelFor(n_folds, fold_workers, [&](std::size_t f) {
    const int fold = static_cast<int>(f);
    const corpus::FoldSplit split = corpus::SplitFold(corpus, plan.folds[f]);
    FoldOutput& out = outputs[f];

    std::vector<features::FeatureVector> train_fvs;
    std::vector<int> train_labels;
    for (std::size_t i : split.train) {
      for (Which w : TrainVariants(config.scenario)) {
        const Variant& v = variant_of(i, w);
        if (!v.ok) {
          out.exclusions.push_back(
              {fold, programs[i].author, programs[i].task, "train", v.reason});
          continue;
        }
        notify(fold, i, AccessEvent::Purpose::kFit);
        train_fvs.push_back(v.features);
        train_labels.push_back(labels[i]);
      }
    }
    const features::FeaturePipeline pipeline =
        features::FitPipeline(train_fvs, train_labels, config.selection_size);
    attribution::Matrix x;
    x.reserve(train_fvs.size());
    for (const auto& fv : train_fvs) x.push_back(features::ApplyPipeline(pipeline, fv));
    const attribution::Model model =
        attribution::Train(x, train_labels, n_authors, train,
                           config.seed * 1000003ULL + static_cast<std::uint64_t>(f));

    for (std::size_t i : split.test) {
      for (Which w : TestVariants(config.scenario)) {
        const Variant& v = variant_of(i, w);
        if (!v.ok) {
          out.exclusions.push_back({fold, programs[i].author, programs[i].task, "test", v.reason});
          continue;
        }
        notify(fold, i, AccessEvent::Purpose::kEvaluate);
        attribution::Matrix row{features::ApplyPipeline(pipeline, v.features)};
        const int truth = labels[i];
        const attribution::Evaluation eval =
            attribution::Evaluate(model, row, std::span<const int>(&truth, 1));
        const attribution::SampleResult& r = eval.samples.front();
        SampleScore s;
        s.fold = fold;
        s.author = programs[i].author;
        s.task = programs[i].task;
        s.variant = variant_name(w);
        s.truth = r.truth;
        s.predicted = r.predicted;
        s.argmax_unique = r.argmax_unique;
        s.confidences.assign(r.confidences.values().begin(), r.confidences.values().end());
        out.samples.push_back(std::move(s));
      }
    }
  });

  UncertaintyReport report;
  report.authors = corpus.authors();
  for (FoldOutput& out : outputs) {
    for (SampleScore& s : out.samples) report.per_sample.push_back(std::move(s));
    for (Exclusion& e : out.exclusions) report.exclusions.push_back(std::move(e));
  }
  const double eps = config.eps ? *config.eps : anonmetrics::EpsilonThreshold(n_authors);
  anonmetrics::ScoreSamples(report, config.k, eps);
  anonmetrics::Aggregate(report);

  report.config = {
      {"scenario", std::string(ScenarioName(config.scenario))},
      {"technique", normalize::TechniqueName(config.technique)},
      {"learner", std::string(attribution::LearnerName(config.train.learner))},
      {"k", std::to_string(config.k)},
      {"eps", config.eps ? FormatDouble(*config.eps) : "auto"},
      {"seed", std::to_string(config.seed)},
      {"selection_size", std::to_string(config.selection_size)},
      {"n_trees", std::to_string(config.train.forest.n_trees)},
      {"n_authors", std::to_string(n_authors)},
      {"n_programs", std::to_string(programs.size())},
      {"n_folds", std::to_string(n_folds)},
  };
  return report;
}

attribution::ModelBundle TrainBundle(const corpus::Corpus& corpus,
                                     const attribution::TrainOptions& options,
                                     std::uint64_t seed, int selection_size,
                                     const normalize::TransformerSpec& technique) {
  std::vector<features::FeatureVector> fvs;
  std::vector<int> labels;
  for (const corpus::Program& p : corpus.programs()) {
    std::string source = corpus::PreprocessSource(p.source);
    if (technique.kind != normalize::TransformerKind::kIdentity) {
      source = normalize::TransformSource(source, technique);
    }
    fvs.push_back(features::AnalyzeSource(source).features);
    labels.push_back(corpus.AuthorIndex(p.author));
  }
  features::FeaturePipeline pipeline = features::FitPipeline(fvs, labels, selection_size);
  attribution::Matrix x;
  for (const auto& fv : fvs) x.push_back(features::ApplyPipeline(pipeline, fv));
  attribution::Model model = attribution::Train(
      x, labels, static_cast<int>(corpus.authors().size()), options, seed);
  return {std::move(pipeline), std::move(model), corpus.authors()};
}

UncertaintyReport RunStatic(const corpus::Corpus& corpus, ScenarioConfig config) {
  config.scenario = Scenario::kStatic;
  return RunScenario(corpus, config);
}

UncertaintyReport RunAdaptiveAugment(const corpus::Corpus& corpus, ScenarioConfig config) {
  config.scenario = Scenario::kAdaptiveAugment;
  return RunScenario(corpus, config);
}

UncertaintyReport RunAdaptiveTransformedOnly(const corpus::Corpus& corpus,
                                             ScenarioConfig config) {
  config.scenario = Scenario::kAdaptiveTransformedOnly;
  return RunScenario(corpus, config);
}

}  // namespace anonybench::harness
