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

#ifndef ANONYBENCH_FEATURES_ANALYZE_H_
#define ANONYBENCH_FEATURES_ANALYZE_H_

#include <string>
#include <string_view>

#include "anonybench/features/features.h"

namespace anonybench::features {

// A program as the learners see it. When the source parses, `text` is its
// canonical print and all spans index into it. Otherwise `text` is the
// source unchanged and only lexical features are present.
struct ProgramView {
  std::string text;
  bool parsed = false;
  FeatureVector features;
};

// Expects preprocessed source. Throws Error(kLex) if even lexing fails.
ProgramView AnalyzeSource(std::string_view source);

}  // namespace anonybench::features

#endif  // ANONYBENCH_FEATURES_ANALYZE_H_
