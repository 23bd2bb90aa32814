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

// Feature highlighting: exact per-feature decomposition of a forest's
// confidence for one author, mapped back to code regions.

#ifndef ANONYBENCH_EXPLAIN_HIGHLIGHT_H_
#define ANONYBENCH_EXPLAIN_HIGHLIGHT_H_

#include <string>
#include <vector>

#include "anonybench/attribution/model.h"
#include "anonybench/cparse/source_span.h"
#include "anonybench/features/analyze.h"
#include "anonybench/features/pipeline.h"

namespace anonybench::explain {

struct FeatureContribution {
  features::FeatureId feature;
  double contribution = 0.0;
  std::vector<cparse::SourceSpan> spans;
};

struct RelevanceEntry {
  cparse::SourceSpan span;
  double relevance = 0.0;
};

struct RelevanceMap {
  int target_author = 0;
  double bias = 0.0;        // mean root value over the trees
  double prediction = 0.0;  // forest confidence for target_author
  // A feature's contribution is split evenly over its spans.
  std::vector<RelevanceEntry> entries;
  std::vector<FeatureContribution> located;
  // Region-less features (ast-depth-*).
  std::vector<FeatureContribution> unlocated;
  // Features the program lacks; their absence moved the prediction.
  std::vector<FeatureContribution> absent;
  // Entry relevance spread over the lines each span covers (index 0 =
  // line 1).
  std::vector<double> line_relevance;

  // bias + every contribution; equals `prediction` up to rounding.
  double Total() const;
};

// Throws Error(kUnsupportedExplainer) unless `model` is a forest, and
// Error(kParameter) for a target outside the author range.
RelevanceMap Highlight(const attribution::Model& model,
                       const features::FeaturePipeline& pipeline,
                       const features::ProgramView& program, int target);

// Shaded HTML rendering of `text`: darker lines carry more relevance,
// red for evidence in favour of the target and blue against it.
std::string RenderHtml(const std::string& text, const RelevanceMap& map,
                       const std::string& title);

std::string RelevanceToJson(const RelevanceMap& map);

}  // namespace anonybench::explain

#endif  // ANONYBENCH_EXPLAIN_HIGHLIGHT_H_
