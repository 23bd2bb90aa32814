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

#include "anonybench/features/features.h"

#include <algorithm>

#include "anonybench/error.h"
#include "json.hpp"

namespace anonybench::features {

using cparse::Node;
using cparse::NodeKind;
using cparse::Token;
using cparse::TokenKind;

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kTokenUnigram: return "token-unigram";
    case Category::kKeywordFreq: return "keyword-freq";
    case Category::kAstNodeFreq: return "ast-node-freq";
    case Category::kAstBigram: return "ast-bigram";
    case Category::kAstDepthMax: return "ast-depth-max";
    case Category::kAstDepthAvg: return "ast-depth-avg";
  }
  return "?";
}

Category ParseCategory(std::string_view name) {
  for (Category c : {Category::kTokenUnigram, Category::kKeywordFreq,
                     Category::kAstNodeFreq, Category::kAstBigram,
                     Category::kAstDepthMax, Category::kAstDepthAvg}) {
    if (CategoryName(c) == name) return c;
  }
  throw Error(ErrorKind::kSchema, "unknown feature category '" +
                                      std::string(name) + "'");
}

std::string ToString(const FeatureId& id) {
  std::string out(CategoryName(id.category));
  if (!id.key.empty()) out += ":" + id.key;
  return out;
}

bool IsRegionless(Category category) {
  return category == Category::kAstDepthMax ||
         category == Category::kAstDepthAvg;
}

namespace {

void AddTokenFeatures(const std::vector<Token>& tokens, FeatureVector& fv) {
  if (tokens.empty()) return;
  std::map<FeatureId, std::size_t> counts;
  for (const Token& t : tokens) {
    FeatureId uni{Category::kTokenUnigram, t.text};
    ++counts[uni];
    fv.regions[uni].push_back(t.span);
    if (t.kind == TokenKind::kKeyword) {
      FeatureId kw{Category::kKeywordFreq, t.text};
      ++counts[kw];
      fv.regions[kw].push_back(t.span);
    }
  }
  const double total = static_cast<double>(tokens.size());
  for (const auto& [id, n] : counts) {
    fv.weights[id] = static_cast<double>(n) / total;
  }
}

}  // namespace

FeatureVector ExtractLexical(const std::vector<Token>& tokens) {
  FeatureVector fv;
  AddTokenFeatures(tokens, fv);
  return fv;
}

FeatureVector Extract(const cparse::Ast& ast, const std::vector<Token>& tokens) {
  FeatureVector fv;
  AddTokenFeatures(tokens, fv);

  std::map<FeatureId, std::size_t> node_counts;
  std::map<FeatureId, std::size_t> edge_counts;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  long long depth_sum = 0;
  int depth_max = 0;

  struct Frame {
    const Node* node;
    int depth;
  };
  std::vector<Frame> stack{{&ast.root, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Node& n = *f.node;
    ++nodes;
    depth_sum += f.depth;
    depth_max = std::max(depth_max, f.depth);
    FeatureId kind{Category::kAstNodeFreq, std::string(NodeKindName(n.kind))};
    ++node_counts[kind];
    fv.regions[kind].push_back(n.span);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      FeatureId pair{Category::kAstBigram, std::string(NodeKindName(n.kind)) +
                                               ">" +
                                               std::string(NodeKindName(it->kind))};
      ++edge_counts[pair];
      fv.regions[pair].push_back(it->span);
      ++edges;
      stack.push_back({&*it, f.depth + 1});
    }
  }
  for (const auto& [id, n] : node_counts) {
    fv.weights[id] = static_cast<double>(n) / static_cast<double>(nodes);
  }
  for (const auto& [id, n] : edge_counts) {
    fv.weights[id] = static_cast<double>(n) / static_cast<double>(edges);
  }
  // Region order follows source order rather than traversal order.
  for (auto& [id, spans] : fv.regions) {
    std::stable_sort(spans.begin(), spans.end(),
                     [](const cparse::SourceSpan& a, const cparse::SourceSpan& b) {
                       return a.byte_start < b.byte_start;
                     });
  }
  fv.weights[{Category::kAstDepthMax, ""}] = depth_max;
  fv.weights[{Category::kAstDepthAvg, ""}] =
      static_cast<double>(depth_sum) / static_cast<double>(nodes);
  return fv;
}

std::string ToJson(const FeatureVector& fv) {
  nlohmann::json features = nlohmann::json::array();
  for (const auto& [id, weight] : fv.weights) {
    nlohmann::json spans = nlohmann::json::array();
    auto it = fv.regions.find(id);
    if (it != fv.regions.end()) {
      for (const auto& s : it->second) spans.push_back({s.byte_start, s.byte_end});
    }
    features.push_back({{"category", CategoryName(id.category)},
                        {"key", id.key},
                        {"weight", weight},
                        {"spans", spans}});
  }
  return nlohmann::json{{"features", features}}.dump(2);
}

}  // namespace anonybench::features
