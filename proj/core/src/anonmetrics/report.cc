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

#include "anonybench/anonmetrics/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "anonybench/anonmetrics/uncertainty.h"
#include "anonybench/error.h"
#include "internal/json_codec.h"
#include "json.hpp"

namespace anonybench::anonmetrics {

using nlohmann::json;

std::array<int, kHistogramBins> BuildHistogram(std::span<const double> scores) {
  std::array<int, kHistogramBins> bins{};
  for (double s : scores) {
    int b = static_cast<int>(std::floor(s * kHistogramBins));
    b = std::clamp(b, 0, kHistogramBins - 1);
    ++bins[static_cast<std::size_t>(b)];
  }
  return bins;
}

void ScoreSamples(UncertaintyReport& report, int k, double eps) {
  if (k < 1) throw Error(ErrorKind::kParameter, "k must be >= 1");
  if (!(eps >= 0.0)) throw Error(ErrorKind::kParameter, "eps must be >= 0");
  report.k = k;
  report.eps = eps;
  for (SampleScore& s : report.per_sample) {
    // A neighbourhood cannot exceed the number of authors.
    int kk = std::min<int>(k, static_cast<int>(s.confidences.size()));
    s.u_k = UncertaintyScore(s.truth, s.confidences, kk);
    s.k_anonymous = IsKAnonymous(s.confidences, s.truth, kk);
    s.k_uncertain_at_eps = IsKUncertain(s.confidences, s.truth, kk, eps);
  }
}

void Aggregate(UncertaintyReport& report) {
  std::map<int, std::pair<int, int>> per_fold;  // fold -> (correct, total)
  std::vector<double> scores;
  Aggregates& a = report.aggregates;
  a = Aggregates{};
  for (const SampleScore& s : report.per_sample) {
    auto& [correct, total] = per_fold[s.fold];
    correct += s.predicted == s.truth ? 1 : 0;
    ++total;
    scores.push_back(s.u_k);
    a.mean_uncertainty += s.u_k;
    a.k_uncertain_fraction += s.k_uncertain_at_eps ? 1.0 : 0.0;
    a.k_anonymous_fraction += s.k_anonymous ? 1.0 : 0.0;
  }
  report.fold_accuracies.clear();
  for (const auto& [fold, ct] : per_fold) {
    report.fold_accuracies.push_back(static_cast<double>(ct.first) /
                                     static_cast<double>(ct.second));
  }
  if (!report.per_sample.empty()) {
    const double n = static_cast<double>(report.per_sample.size());
    a.mean_uncertainty /= n;
    a.k_uncertain_fraction /= n;
    a.k_anonymous_fraction /= n;
  }
  if (!report.fold_accuracies.empty()) {
    const double f = static_cast<double>(report.fold_accuracies.size());
    for (double acc : report.fold_accuracies) a.accuracy += acc;
    a.accuracy /= f;
    double var = 0.0;
    for (double acc : report.fold_accuracies) {
      var += (acc - a.accuracy) * (acc - a.accuracy);
    }
    a.accuracy_std = std::sqrt(var / f);
  }
  report.histogram = BuildHistogram(scores);
}

std::string ReportToJson(const UncertaintyReport& r) {
  json samples = json::array();
  for (const SampleScore& s : r.per_sample) {
    samples.push_back({{"fold", s.fold},
                       {"author", s.author},
                       {"task", s.task},
                       {"variant", s.variant},
                       {"truth", s.truth},
                       {"predicted", s.predicted},
                       {"argmax_unique", s.argmax_unique},
                       {"u_k", s.u_k},
                       {"k_anonymous", s.k_anonymous},
                       {"k_uncertain_at_eps", s.k_uncertain_at_eps},
                       {"confidences", s.confidences}});
  }
  json exclusions = json::array();
  for (const Exclusion& e : r.exclusions) {
    exclusions.push_back({{"fold", e.fold},
                          {"author", e.author},
                          {"task", e.task},
                          {"stage", e.stage},
                          {"reason", e.reason}});
  }
  const Aggregates& a = r.aggregates;
  json v = {{"format_version", kReportFormatVersion},
            {"config", r.config},
            {"authors", r.authors},
            {"k", r.k},
            {"eps", r.eps},
            {"per_sample", std::move(samples)},
            {"fold_accuracies", r.fold_accuracies},
            {"aggregates",
             {{"accuracy", a.accuracy},
              {"accuracy_std", a.accuracy_std},
              {"mean_uncertainty", a.mean_uncertainty},
              {"k_uncertain_fraction", a.k_uncertain_fraction},
              {"k_anonymous_fraction", a.k_anonymous_fraction},
              {"n_samples", r.per_sample.size()},
              {"n_excluded", r.exclusions.size()}}},
            {"histogram",
             {{"bins", kHistogramBins},
              {"range", {0.0, 1.0}},
              {"counts", r.histogram}}},
            {"exclusions", std::move(exclusions)}};
  return v.dump(2);
}

UncertaintyReport ReportFromJson(const std::string& text) {
  json v = internal::ParseJson(text, "report");
  try {
    if (v.at("format_version").get<int>() != kReportFormatVersion) {
      throw Error(ErrorKind::kSchema, "unsupported report format version");
    }
    UncertaintyReport r;
    r.config = v.at("config").get<std::map<std::string, std::string>>();
    r.authors = v.at("authors").get<std::vector<std::string>>();
    r.k = v.at("k").get<int>();
    r.eps = v.at("eps").get<double>();
    for (const json& s : v.at("per_sample")) {
      SampleScore x;
      x.fold = s.at("fold").get<int>();
      x.author = s.at("author").get<std::string>();
      x.task = s.at("task").get<std::string>();
      x.variant = s.at("variant").get<std::string>();
      x.truth = s.at("truth").get<int>();
      x.predicted = s.at("predicted").get<int>();
      x.argmax_unique = s.at("argmax_unique").get<bool>();
      x.u_k = s.at("u_k").get<double>();
      x.k_anonymous = s.at("k_anonymous").get<bool>();
      x.k_uncertain_at_eps = s.at("k_uncertain_at_eps").get<bool>();
      x.confidences = s.at("confidences").get<std::vector<double>>();
      if (x.truth < 0 || x.truth >= static_cast<int>(x.confidences.size())) {
        throw Error(ErrorKind::kSchema, "sample truth index out of range");
      }
      r.per_sample.push_back(std::move(x));
    }
    r.fold_accuracies = v.at("fold_accuracies").get<std::vector<double>>();
    const json& a = v.at("aggregates");
    r.aggregates.accuracy = a.at("accuracy").get<double>();
    r.aggregates.accuracy_std = a.at("accuracy_std").get<double>();
    r.aggregates.mean_uncertainty = a.at("mean_uncertainty").get<double>();
    r.aggregates.k_uncertain_fraction = a.at("k_uncertain_fraction").get<double>();
    r.aggregates.k_anonymous_fraction = a.at("k_anonymous_fraction").get<double>();
    auto counts = v.at("histogram").at("counts").get<std::vector<int>>();
    if (counts.size() != kHistogramBins) {
      throw Error(ErrorKind::kSchema, "histogram must have 10 bins");
    }
    std::copy(counts.begin(), counts.end(), r.histogram.begin());
    for (const json& e : v.at("exclusions")) {
      r.exclusions.push_back({e.at("fold").get<int>(),
                              e.at("author").get<std::string>(),
                              e.at("task").get<std::string>(),
                              e.at("stage").get<std::string>(),
                              e.at("reason").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("malformed report: ") + e.what());
  }
}

void SaveReport(const UncertaintyReport& report,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInput, "cannot write " + path.string());
  out << ReportToJson(report) << "\n";
}

UncertaintyReport LoadReport(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ReportFromJson(ss.str());
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ReportCsvHeader() {
  return "scenario,technique,learner,k,accuracy,accuracy_std,mean_uncertainty,"
         "k_uncertain_fraction,n_samples,n_excluded";
}

std::string ReportCsvRow(const UncertaintyReport& r) {
  auto get = [&](const char* key) {
    auto it = r.config.find(key);
    return CsvField(it == r.config.end() ? std::string() : it->second);
  };
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed;
  os << get("scenario") << ',' << get("technique") << ',' << get("learner")
     << ',' << r.k << ',' << r.aggregates.accuracy << ','
     << r.aggregates.accuracy_std << ',' << r.aggregates.mean_uncertainty << ','
     << r.aggregates.k_uncertain_fraction << ',' << r.per_sample.size() << ','
     << r.exclusions.size();
  return os.str();
}

}  // namespace anonybench::anonmetrics
