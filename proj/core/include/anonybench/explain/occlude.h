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

// Occlusion analysis: relevance of a code segment is the drop in the
// target author's confidence when the segment is removed.

#ifndef ANONYBENCH_EXPLAIN_OCCLUDE_H_
#define ANONYBENCH_EXPLAIN_OCCLUDE_H_

#include <functional>
#include <string>
#include <vector>

#include "anonybench/attribution/model.h"
#include "anonybench/cparse/source_span.h"
#include "anonybench/normalize/transformer.h"

namespace anonybench::explain {

enum class SegmentStatus { kScored, kSkippedUnparseable };

std::string_view SegmentStatusName(SegmentStatus status);

struct Segment {
  int id = 0;
  cparse::SourceSpan span;
  std::string text;  // includes the trailing newline, if any
  SegmentStatus status = SegmentStatus::kScored;
  double relevance = 0.0;  // meaningful only when scored
};

// Maps program text to per-author confidences. Must be safe to call from
// several threads at once.
using Attributor = std::function<std::vector<double>(const std::string&)>;
using Segmenter = std::function<std::vector<Segment>(const std::string&)>;

// One segment per physical line; concatenating the texts reproduces `text`.
std::vector<Segment> SegmentLines(const std::string& text);

struct OcclusionResult {
  int target_author = 0;
  double baseline = 0.0;  // c*_t of the unoccluded program
  std::vector<Segment> segments;

  int skipped() const;
};

struct OcclusionOptions {
  unsigned threads = 0;
  Segmenter segmenter = SegmentLines;
};

// For every segment s: remove it, require the rest to parse and to survive
// the anonymizer, then score R_s = c*_t - c^s_t. Segments that are blank
// are scored 0 without being evaluated. Throws if the anonymizer fails on
// the complete program.
OcclusionResult Occlude(const std::string& program, const Attributor& attributor,
                        const normalize::TransformerSpec& anonymizer, int target,
                        const OcclusionOptions& options = {});

// Preprocess, analyze and predict with a trained bundle.
Attributor ModelAttributor(const attribution::ModelBundle& bundle);

std::string OcclusionToJson(const OcclusionResult& result);

}  // namespace anonybench::explain

#endif  // ANONYBENCH_EXPLAIN_OCCLUDE_H_
