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

#include "anonybench/attribution/model.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "anonybench/error.h"
#include "internal/json_codec.h"
#include "json.hpp"

namespace anonybench::attribution {

using nlohmann::json;

std::string_view LearnerName(Learner learner) {
  return learner == Learner::kForest ? "forest" : "linear";
}

Learner ParseLearner(std::string_view name) {
  if (name == "forest") return Learner::kForest;
  if (name == "linear") return Learner::kLinear;
  throw Error(ErrorKind::kParameter,
              "unknown learner '" + std::string(name) + "'");
}

Learner Model::learner() const {
  return std::holds_alternative<ForestModel>(impl_) ? Learner::kForest
                                                    : Learner::kLinear;
}

int Model::n_classes() const {
  return std::visit([](const auto& m) { return m.n_classes; }, impl_);
}

int Model::n_features() const {
  return std::visit([](const auto& m) { return m.n_features; }, impl_);
}

ConfidenceVector Model::Predict(std::span<const double> x) const {
  if (const auto* f = forest()) return PredictForest(*f, x);
  return PredictLinear(*linear(), x);
}

Model Train(const Matrix& x, std::span<const int> y, int n_classes,
            const TrainOptions& options, std::uint64_t seed) {
  if (n_classes < 2) {
    throw Error(ErrorKind::kTraining, "at least two authors are required");
  }
  if (options.learner == Learner::kForest) {
    return Model(TrainForest(x, y, n_classes, options.forest, seed));
  }
  return Model(TrainLinear(x, y, n_classes, options.linear, seed));
}

Evaluation Evaluate(const Model& model, const Matrix& x,
                    std::span<const int> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kInput, "sample and label counts differ");
  }
  Evaluation out;
  std::size_t correct = 0;
  out.samples.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    ConfidenceVector c = model.Predict(x[i]);
    int pred = c.Argmax();
    bool unique = c.ArgmaxUnique();
    if (pred == y[i]) ++correct;
    out.samples.push_back({std::move(c), y[i], pred, unique});
  }
  out.accuracy = x.empty() ? 0.0
                           : static_cast<double>(correct) /
                                 static_cast<double>(x.size());
  return out;
}

FoldSummary SummarizeFolds(std::span<const double> fold_accuracies) {
  FoldSummary s;
  if (fold_accuracies.empty()) return s;
  const double n = static_cast<double>(fold_accuracies.size());
  for (double a : fold_accuracies) s.mean += a;
  s.mean /= n;
  double var = 0.0;
  for (double a : fold_accuracies) var += (a - s.mean) * (a - s.mean);
  s.std_dev = std::sqrt(var / n);
  return s;
}

namespace {

json ForestToValue(const ForestModel& f) {
  json trees = json::array();
  for (const DecisionTree& t : f.trees) {
    json nodes = json::array();
    for (const TreeNode& n : t.nodes) {
      nodes.push_back({n.feature, n.threshold, n.left, n.right, n.value});
    }
    trees.push_back(std::move(nodes));
  }
  return {{"n_trees", f.params.n_trees},
          {"max_depth", f.params.max_depth},
          {"min_split", f.params.min_split},
          {"features_per_split", f.params.features_per_split},
          {"seed", f.seed},
          {"n_classes", f.n_classes},
          {"n_features", f.n_features},
          {"trees", std::move(trees)}};
}

ForestModel ForestFromValue(const json& v) {
  ForestModel f;
  f.params.n_trees = v.at("n_trees").get<int>();
  f.params.max_depth = v.at("max_depth").get<int>();
  f.params.min_split = v.at("min_split").get<int>();
  f.params.features_per_split = v.at("features_per_split").get<int>();
  f.seed = v.at("seed").get<std::uint64_t>();
  f.n_classes = v.at("n_classes").get<int>();
  f.n_features = v.at("n_features").get<int>();
  for (const json& jt : v.at("trees")) {
    DecisionTree t;
    for (const json& jn : jt) {
      TreeNode n;
      n.feature = jn.at(0).get<int>();
      n.threshold = jn.at(1).get<double>();
      n.left = jn.at(2).get<int>();
      n.right = jn.at(3).get<int>();
      n.value = jn.at(4).get<std::vector<double>>();
      if (static_cast<int>(n.value.size()) != f.n_classes) {
        throw Error(ErrorKind::kSchema, "tree node has a wrong class count");
      }
      t.nodes.push_back(std::move(n));
    }
    const int size = static_cast<int>(t.nodes.size());
    if (size == 0) throw Error(ErrorKind::kSchema, "empty tree");
    for (const TreeNode& n : t.nodes) {
      if (n.is_leaf()) continue;
      if (n.feature >= f.n_features || n.left <= 0 || n.right <= 0 ||
          n.left >= size || n.right >= size) {
        throw Error(ErrorKind::kSchema, "malformed tree node");
      }
    }
    f.trees.push_back(std::move(t));
  }
  return f;
}

json LinearToValue(const LinearModel& m) {
  return {{"learning_rate", m.params.learning_rate},
          {"epochs", m.params.epochs},
          {"l2", m.params.l2},
          {"seed", m.seed},
          {"n_classes", m.n_classes},
          {"n_features", m.n_features},
          {"weights", m.weights},
          {"bias", m.bias},
          {"feature_mean", m.feature_mean},
          {"feature_scale", m.feature_scale}};
}

LinearModel LinearFromValue(const json& v) {
  LinearModel m;
  m.params.learning_rate = v.at("learning_rate").get<double>();
  m.params.epochs = v.at("epochs").get<int>();
  m.params.l2 = v.at("l2").get<double>();
  m.seed = v.at("seed").get<std::uint64_t>();
  m.n_classes = v.at("n_classes").get<int>();
  m.n_features = v.at("n_features").get<int>();
  m.weights = v.at("weights").get<Matrix>();
  m.bias = v.at("bias").get<std::vector<double>>();
  m.feature_mean = v.at("feature_mean").get<std::vector<double>>();
  m.feature_scale = v.at("feature_scale").get<std::vector<double>>();
  const auto d = static_cast<std::size_t>(m.n_features);
  bool ok = m.weights.size() == static_cast<std::size_t>(m.n_classes) &&
            m.bias.size() == m.weights.size() &&
            m.feature_mean.size() == d && m.feature_scale.size() == d;
  for (const auto& row : m.weights) ok = ok && row.size() == d;
  if (!ok) throw Error(ErrorKind::kSchema, "linear model has inconsistent shapes");
  return m;
}

}  // namespace

std::string ModelToJson(const ModelBundle& bundle) {
  json v = {{"format_version", kModelFormatVersion},
            {"learner", LearnerName(bundle.model.learner())},
            {"authors", bundle.authors},
            {"pipeline", internal::PipelineToValue(bundle.pipeline)}};
  if (const auto* f = bundle.model.forest()) {
    v["model"] = ForestToValue(*f);
  } else {
    v["model"] = LinearToValue(*bundle.model.linear());
  }
  return v.dump();
}

ModelBundle ModelFromJson(const std::string& text) {
  json v = internal::ParseJson(text, "model");
  try {
    int version = v.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error(ErrorKind::kSchema, "unsupported model format version " +
                                          std::to_string(version));
    }
    Learner learner = ParseLearner(v.at("learner").get<std::string>());
    auto authors = v.at("authors").get<std::vector<std::string>>();
    auto pipeline = internal::PipelineFromValue(v.at("pipeline"));
    Model model = learner == Learner::kForest
                      ? Model(ForestFromValue(v.at("model")))
                      : Model(LinearFromValue(v.at("model")));
    if (model.n_classes() != static_cast<int>(authors.size())) {
      throw Error(ErrorKind::kSchema, "author list does not match the model");
    }
    if (model.n_features() != static_cast<int>(pipeline.dimension())) {
      throw Error(ErrorKind::kSchema, "pipeline does not match the model");
    }
    return ModelBundle{std::move(pipeline), std::move(model), std::move(authors)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("malformed model: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParameter) {
      throw Error(ErrorKind::kSchema, e.what());
    }
    throw;
  }
}

void SaveModel(const ModelBundle& bundle, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kInput, "cannot write " + path.string());
  }
  out << ModelToJson(bundle);
  if (!out) throw Error(ErrorKind::kInput, "failed writing " + path.string());
}

ModelBundle LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ModelFromJson(ss.str());
}

}  // namespace anonybench::attribution
