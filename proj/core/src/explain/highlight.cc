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

#include "anonybench/explain/highlight.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "anonybench/error.h"
#include "json.hpp"

namespace anonybench::explain {

double RelevanceMap::Total() const {
  double sum = bias;
  for (const auto* bucket : {&located, &unlocated, &absent}) {
    for (const auto& c : *bucket) sum += c.contribution;
  }
  return sum;
}

RelevanceMap Highlight(const attribution::Model& model,
                       const features::FeaturePipeline& pipeline,
                       const features::ProgramView& program, int target) {
  const attribution::ForestModel* forest = model.forest();
  if (forest == nullptr) {
    throw Error(ErrorKind::kUnsupportedExplainer,
                "feature highlighting needs a forest model, got " +
                    std::string(attribution::LearnerName(model.learner())));
  }
  if (target < 0 || target >= forest->n_classes) {
    throw Error(ErrorKind::kParameter, "target author out of range");
  }
  const std::vector<double> x = features::ApplyPipeline(pipeline, program.features);
  if (static_cast<int>(x.size()) != forest->n_features) {
    throw Error(ErrorKind::kInput, "pipeline does not match the model");
  }
  const auto t = static_cast<std::size_t>(target);
  std::vector<double> per_feature(x.size(), 0.0);
  double bias = 0.0, prediction = 0.0;
  for (const auto& tree : forest->trees) {
    const auto path = tree.Path(x);
    bias += tree.nodes[static_cast<std::size_t>(path.front())].value[t];
    prediction += tree.nodes[static_cast<std::size_t>(path.back())].value[t];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const auto& node = tree.nodes[static_cast<std::size_t>(path[i])];
      const auto& next = tree.nodes[static_cast<std::size_t>(path[i + 1])];
      per_feature[static_cast<std::size_t>(node.feature)] += next.value[t] - node.value[t];
    }
  }
  const double n_trees = static_cast<double>(forest->trees.size());
  RelevanceMap map;
  map.target_author = target;
  map.bias = bias / n_trees;
  map.prediction = prediction / n_trees;

  int max_line = 1;
  for (char c : program.text) max_line += c == '\n' ? 1 : 0;
  map.line_relevance.assign(static_cast<std::size_t>(max_line), 0.0);

  for (std::size_t j = 0; j < per_feature.size(); ++j) {
    if (per_feature[j] == 0.0) continue;
    FeatureContribution fc;
    fc.feature = pipeline.selected[j];
    fc.contribution = per_feature[j] / n_trees;
    if (features::IsRegionless(fc.feature.category)) {
      map.unlocated.push_back(std::move(fc));
      continue;
    }
    auto r = program.features.regions.find(fc.feature);
    if (r == program.features.regions.end() || r->second.empty()) {
      map.absent.push_back(std::move(fc));
      continue;
    }
    fc.spans = r->second;
    const double share = fc.contribution / static_cast<double>(fc.spans.size());
    for (const auto& span : fc.spans) {
      map.entries.push_back({span, share});
      const int lines = span.line_end - span.line_start + 1;
      for (int l = span.line_start; l <= span.line_end; ++l) {
        if (l >= 1 && l <= max_line) {
          map.line_relevance[static_cast<std::size_t>(l - 1)] += share / lines;
        }
      }
    }
    map.located.push_back(std::move(fc));
  }
  auto by_magnitude = [](const FeatureContribution& a, const FeatureContribution& b) {
    if (std::abs(a.contribution) != std::abs(b.contribution)) {
      return std::abs(a.contribution) > std::abs(b.contribution);
    }
    return a.feature < b.feature;
  };
  std::sort(map.located.begin(), map.located.end(), by_magnitude);
  std::sort(map.unlocated.begin(), map.unlocated.end(), by_magnitude);
  std::sort(map.absent.begin(), map.absent.end(), by_magnitude);
  return map;
}

namespace {

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderHtml(const std::string& text, const RelevanceMap& map,
                       const std::string& title) {
  double peak = 0.0;
  for (double r : map.line_relevance) peak = std::max(peak, std::abs(r));
  std::ostringstream os;
  os << "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>"
     << Escape(title) << "</title>\n<style>body{font-family:sans-serif}"
     << "pre{font-family:monospace;line-height:1.3}"
     << ".ln{color:#999;display:inline-block;width:3em}</style></head><body>\n"
     << "<h3>" << Escape(title) << "</h3>\n<p>author index " << map.target_author
     << ", confidence " << std::setprecision(6) << map.prediction << ", bias "
     << map.bias << "</p>\n<pre>";
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    double r = n < map.line_relevance.size() ? map.line_relevance[n] : 0.0;
    double alpha = peak > 0 ? std::abs(r) / peak : 0.0;
    const char* rgb = r >= 0 ? "220,40,40" : "40,90,220";
    os << "<span title=\"" << std::setprecision(4) << r << "\" style=\"background:rgba("
       << rgb << ',' << std::fixed << std::setprecision(3) << alpha * 0.85 << ")\">"
       << std::defaultfloat << "<span class=\"ln\">" << n + 1 << "</span>"
       << Escape(line) << "</span>\n";
    ++n;
  }
  os << "</pre>\n<h4>Strongest located features</h4>\n<ol>\n";
  std::size_t shown = 0;
  for (const auto& c : map.located) {
    if (++shown > 20) break;
    os << "<li><code>" << Escape(features::ToString(c.feature)) << "</code> "
       << std::setprecision(4) << c.contribution << "</li>\n";
  }
  os << "</ol>\n";
  if (!map.unlocated.empty()) {
    os << "<h4>Features without a code region</h4>\n<ul>\n";
    for (const auto& c : map.unlocated) {
      os << "<li><code>" << Escape(features::ToString(c.feature)) << "</code> "
         << std::setprecision(4) << c.contribution << "</li>\n";
    }
    os << "</ul>\n";
  }
  os << "</body></html>\n";
  return os.str();
}

std::string RelevanceToJson(const RelevanceMap& map) {
  using nlohmann::json;
  auto bucket = [](const std::vector<FeatureContribution>& v) {
    json out = json::array();
    for (const auto& c : v) {
      json spans = json::array();
      for (const auto& s : c.spans) spans.push_back({s.byte_start, s.byte_end});
      out.push_back({{"category", features::CategoryName(c.feature.category)},
                     {"key", c.feature.key},
                     {"contribution", c.contribution},
                     {"spans", std::move(spans)}});
    }
    return out;
  };
  json v = {{"target_author", map.target_author},
            {"bias", map.bias},
            {"prediction", map.prediction},
            {"located", bucket(map.located)},
            {"unlocated", bucket(map.unlocated)},
            {"absent", bucket(map.absent)},
            {"line_relevance", map.line_relevance}};
  return v.dump(2);
}

}  // namespace anonybench::explain
