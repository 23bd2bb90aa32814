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

#include "anonybench/explain/occlude.h"

#include <algorithm>

#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/error.h"
#include "anonybench/features/analyze.h"
#include "anonybench/util/parallel.h"
#include "json.hpp"

namespace anonybench::explain {

std::string_view SegmentStatusName(SegmentStatus status) {
  return status == SegmentStatus::kScored ? "scored" : "skipped-unparseable";
}

std::vector<Segment> SegmentLines(const std::string& text) {
  std::vector<Segment> out;
  std::size_t start = 0;
  int line = 1;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::size_t end = nl == std::string::npos ? text.size() : nl + 1;
    Segment s;
    s.id = static_cast<int>(out.size());
    s.span = {start, end, line, line};
    s.text = text.substr(start, end - start);
    out.push_back(std::move(s));
    start = end;
    ++line;
  }
  return out;
}

int OcclusionResult::skipped() const {
  return static_cast<int>(std::count_if(segments.begin(), segments.end(), [](const Segment& s) {
    return s.status == SegmentStatus::kSkippedUnparseable;
  }));
}

namespace {

double Confidence(const Attributor& attributor, const std::string& text, int target) {
  std::vector<double> c = attributor(text);
  if (target < 0 || target >= static_cast<int>(c.size())) {
    throw Error(ErrorKind::kParameter, "target author out of range");
  }
  return c[static_cast<std::size_t>(target)];
}

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

OcclusionResult Occlude(const std::string& program, const Attributor& attributor,
                        const normalize::TransformerSpec& anonymizer, int target,
                        const OcclusionOptions& options) {
  OcclusionResult result;
  result.target_author = target;
  result.baseline =
      Confidence(attributor, normalize::TransformSource(program, anonymizer), target);
  result.segments = options.segmenter(program);
  util::ParallelFor(result.segments.size(), options.threads, [&](std::size_t i) {
    Segment& s = result.segments[i];
    if (IsBlank(s.text)) {
      s.relevance = 0.0;
      return;
    }
    std::string rest = program.substr(0, s.span.byte_start) + program.substr(s.span.byte_end);
    try {
      cparse::ParseSource(rest);
      std::string anonymized = normalize::TransformSource(rest, anonymizer);
      s.relevance = result.baseline - Confidence(attributor, anonymized, target);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kParameter) throw;
      s.status = SegmentStatus::kSkippedUnparseable;
      s.relevance = 0.0;
    }
  });
  return result;
}

Attributor ModelAttributor(const attribution::ModelBundle& bundle) {
  return [&bundle](const std::string& source) {
    features::ProgramView view = features::AnalyzeSource(corpus::PreprocessSource(source));
    std::vector<double> x = features::ApplyPipeline(bundle.pipeline, view.features);
    return bundle.model.Predict(x).values();
  };
}

std::string OcclusionToJson(const OcclusionResult& result) {
  using nlohmann::json;
  json segs = json::array();
  for (const Segment& s : result.segments) {
    json j = {{"id", s.id},
              {"line", s.span.line_start},
              {"span", {s.span.byte_start, s.span.byte_end}},
              {"text", s.text},
              {"status", SegmentStatusName(s.status)}};
    j["relevance"] = s.status == SegmentStatus::kScored ? json(s.relevance) : json(nullptr);
    segs.push_back(std::move(j));
  }
  json v = {{"target_author", result.target_author},
            {"baseline", result.baseline},
            {"skipped", result.skipped()},
            {"segments", std::move(segs)}};
  return v.dump(2);
}

}  // namespace anonybench::explain
