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

#ifndef ANONYBENCH_FEATURES_FEATURES_H_
#define ANONYBENCH_FEATURES_FEATURES_H_

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anonybench/cparse/ast.h"
#include "anonybench/cparse/source_span.h"
#include "anonybench/cparse/token.h"

namespace anonybench::features {

enum class Category {
  kTokenUnigram,
  kKeywordFreq,
  kAstNodeFreq,
  kAstBigram,
  kAstDepthMax,
  kAstDepthAvg,
};

std::string_view CategoryName(Category category);
Category ParseCategory(std::string_view name);

struct FeatureId {
  Category category;
  std::string key;  // empty for the depth features

  friend auto operator<=>(const FeatureId&, const FeatureId&) = default;
  friend bool operator==(const FeatureId&, const FeatureId&) = default;
};

std::string ToString(const FeatureId& id);

// True for features that have no code region (AST depth statistics).
bool IsRegionless(Category category);

struct FeatureVector {
  std::map<FeatureId, double> weights;
  std::map<FeatureId, std::vector<cparse::SourceSpan>> regions;
};

// Lexical and syntactic features of one parsed program:
//   token-unigram   count(token text) / #tokens
//   keyword-freq    count(keyword) / #tokens
//   ast-node-freq   count(kind) / #nodes
//   ast-bigram      count(parent kind > child kind) / #edges
//   ast-depth-max   deepest node (root = 0)
//   ast-depth-avg   mean node depth
// Every counted occurrence contributes its span to `regions`.
FeatureVector Extract(const cparse::Ast& ast,
                      const std::vector<cparse::Token>& tokens);

// Token features only, for text that lexes but does not parse.
FeatureVector ExtractLexical(const std::vector<cparse::Token>& tokens);

// {"features":[{"category":..,"key":..,"weight":..,"spans":[[s,e],..]}]}
std::string ToJson(const FeatureVector& fv);

}  // namespace anonybench::features

#endif  // ANONYBENCH_FEATURES_FEATURES_H_
