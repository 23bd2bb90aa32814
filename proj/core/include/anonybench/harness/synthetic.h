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

// Synthetic author/task corpus with controllable coding-style signals.

#ifndef ANONYBENCH_HARNESS_SYNTHETIC_H_
#define ANONYBENCH_HARNESS_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "anonybench/corpus/corpus.h"

namespace anonybench::harness {

// Per-author habits. The first group is what normalization erases; the
// second group survives it and is applied with probability `consistency`
// per decision; the last group only affects layout and comments.
struct StyleProfile {
  int vocabulary = 0;
  int helper_naming = 0;
  int int_spelling = 0;
  int wide_spelling = 0;
  bool braces = true;
  bool compound_assign = true;
  int increment = 0;  // 0 v++, 1 ++v, 2 v += 1, 3 v = v + 1
  int main_signature = 0;
  bool explicit_return = true;
  bool multidecl = false;
  bool extra_parens = false;
  bool comma_statements = false;
  bool use_switch = false;

  int loop_style = 0;  // 0 for, 1 for with declaration, 2 while
  int result_format = 0;
  int newline_style = 0;
  int element_format = 0;
  int include_set = 0;
  bool explicit_compare = false;
  bool use_helpers = false;
  bool global_data = false;
  bool use_ternary = false;
  double consistency = 0.8;

  int indent = 4;
  bool allman = false;
  int comment_style = 0;
};

inline constexpr int kStyleDimensions = 24;

// Number of dimensions (out of kStyleDimensions) in which two profiles
// differ.
int ProfileDistance(const StyleProfile& a, const StyleProfile& b);

// Profiles pairwise differing in at least three dimensions.
std::vector<StyleProfile> MakeProfiles(int n_authors, std::uint64_t seed);

inline constexpr int kTaskTemplates = 10;

std::string TaskName(int task);

// A complete, self-contained C program solving `task` in the given style.
std::string RenderProgram(int task, const StyleProfile& profile, std::uint64_t seed);

// Authors are named "author00".."authorNN"; tasks "t0_<name>"...
// Deterministic in (n_authors, n_tasks, seed). Throws Error(kParameter)
// for fewer than two authors or tasks, or more tasks than templates.
corpus::Corpus GenerateSyntheticCorpus(int n_authors, int n_tasks, std::uint64_t seed);

}  // namespace anonybench::harness

#endif  // ANONYBENCH_HARNESS_SYNTHETIC_H_
