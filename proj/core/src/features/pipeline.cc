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

#include "anonybench/features/pipeline.h"

#include <algorithm>
#include <array>
#include <memory>
#include <cmath>
#include <numeric>
#include <set>

#include "anonybench/error.h"
#include "internal/json_codec.h"
#include "json.hpp"

namespace anonybench::features {

double MutualInformation(std::span<const bool> present,
                         std::span<const int> labels) {
  if (present.size() != labels.size()) {
    throw Error(ErrorKind::kParameter, "presence/label length mismatch");
  }
  const double n = static_cast<double>(labels.size());
  if (labels.empty()) return 0.0;
  std::map<int, std::array<double, 2>> joint;
  std::array<double, 2> marginal{0.0, 0.0};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int f = present[i] ? 1 : 0;
    joint[labels[i]][f] += 1.0;
    marginal[f] += 1.0;
  }
  double mi = 0.0;
  for (const auto& [label, counts] : joint) {
    double py = (counts[0] + counts[1]) / n;
    for (int f = 0; f < 2; ++f) {
      if (counts[f] == 0.0) continue;
      double pxy = counts[f] / n;
      double px = marginal[f] / n;
      mi += pxy * std::log(pxy / (px * py));
    }
  }
  return std::max(0.0, mi);
}

FeaturePipeline FitPipeline(std::span<const FeatureVector> train,
                            std::span<const int> labels, int m,
                            std::vector<std::string>* warnings) {
  if (m <= 0) {
    throw Error(ErrorKind::kParameter,
                "selection size must be positive, got " + std::to_string(m));
  }
  if (train.empty()) {
    throw Error(ErrorKind::kParameter, "empty training set");
  }
  if (train.size() != labels.size()) {
    throw Error(ErrorKind::kParameter, "feature/label count mismatch");
  }
  if (std::set<int>(labels.begin(), labels.end()).size() < 2) {
    throw Error(ErrorKind::kParameter, "need at least two distinct labels");
  }

  std::map<FeatureId, std::size_t> df;
  for (const FeatureVector& fv : train) {
    for (const auto& [id, w] : fv.weights) {
      if (w != 0.0) ++df[id];
    }
  }
  FeaturePipeline p;
  const double n_docs = static_cast<double>(train.size());
  for (const auto& [id, count] : df) {
    p.vocabulary.push_back(id);
    p.idf[id] = std::log(n_docs / (1.0 + static_cast<double>(count))) + 1.0;
  }

  std::size_t keep = static_cast<std::size_t>(m);
  if (keep > p.vocabulary.size()) {
    if (warnings) {
      warnings->push_back("selection size " + std::to_string(m) +
                          " exceeds vocabulary size " +
                          std::to_string(p.vocabulary.size()) +
                          "; keeping the whole vocabulary");
    }
    keep = p.vocabulary.size();
  }

  std::vector<double> mi(p.vocabulary.size());
  for (std::size_t f = 0; f < p.vocabulary.size(); ++f) {
    const FeatureId& id = p.vocabulary[f];
    std::unique_ptr<bool[]> present(new bool[train.size()]);
    for (std::size_t i = 0; i < train.size(); ++i) {
      auto it = train[i].weights.find(id);
      present[i] = it != train[i].weights.end() && it->second != 0.0;
    }
    mi[f] = MutualInformation(std::span<const bool>(present.get(), train.size()),
                              labels);
  }
  std::vector<std::size_t> order(p.vocabulary.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return mi[a] > mi[b]; });
  order.resize(keep);
  std::sort(order.begin(), order.end());
  for (std::size_t f : order) p.selected.push_back(p.vocabulary[f]);
  p.fitted = true;
  return p;
}

std::vector<double> ApplyPipeline(const FeaturePipeline& pipeline,
                                  const FeatureVector& fv) {
  if (!pipeline.fitted) {
    throw Error(ErrorKind::kState, "feature pipeline has not been fitted");
  }
  std::vector<double> out(pipeline.selected.size(), 0.0);
  for (std::size_t i = 0; i < pipeline.selected.size(); ++i) {
    const FeatureId& id = pipeline.selected[i];
    auto it = fv.weights.find(id);
    if (it == fv.weights.end()) continue;
    out[i] = it->second * pipeline.idf.at(id);
  }
  return out;
}

}  // namespace anonybench::features

namespace anonybench::internal {

using features::FeatureId;

namespace {

nlohmann::json IdToValue(const FeatureId& id) {
  return nlohmann::json::array({features::CategoryName(id.category), id.key});
}

FeatureId IdFromValue(const nlohmann::json& v) {
  return {features::ParseCategory(v.at(0).get<std::string>()),
          v.at(1).get<std::string>()};
}

}  // namespace

nlohmann::json ParseJson(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("malformed ") + what + ": " +
                                        e.what());
  }
}

nlohmann::json PipelineToValue(const features::FeaturePipeline& p) {
  nlohmann::json vocab = nlohmann::json::array();
  for (const FeatureId& id : p.vocabulary) {
    nlohmann::json entry = IdToValue(id);
    entry.push_back(p.idf.at(id));
    vocab.push_back(entry);
  }
  nlohmann::json selected = nlohmann::json::array();
  for (const FeatureId& id : p.selected) selected.push_back(IdToValue(id));
  return {{"fitted", p.fitted}, {"vocabulary", vocab}, {"selected", selected}};
}

features::FeaturePipeline PipelineFromValue(const nlohmann::json& v) {
  try {
    features::FeaturePipeline p;
    p.fitted = v.at("fitted").get<bool>();
    for (const auto& entry : v.at("vocabulary")) {
      FeatureId id = IdFromValue(entry);
      p.vocabulary.push_back(id);
      p.idf[id] = entry.at(2).get<double>();
    }
    for (const auto& entry : v.at("selected")) {
      FeatureId id = IdFromValue(entry);
      if (!p.idf.count(id)) {
        throw Error(ErrorKind::kSchema, "selected feature outside vocabulary: " +
                                            features::ToString(id));
      }
      p.selected.push_back(id);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("bad pipeline record: ") + e.what());
  }
}

}  // namespace anonybench::internal

namespace anonybench::features {

std::string PipelineToJson(const FeaturePipeline& pipeline) {
  return internal::PipelineToValue(pipeline).dump();
}

FeaturePipeline PipelineFromJson(const std::string& json) {
  return internal::PipelineFromValue(internal::ParseJson(json, "pipeline"));
}

}  // namespace anonybench::features
