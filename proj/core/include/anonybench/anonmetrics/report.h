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

#ifndef ANONYBENCH_ANONMETRICS_REPORT_H_
#define ANONYBENCH_ANONMETRICS_REPORT_H_

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace anonybench::anonmetrics {

inline constexpr int kReportFormatVersion = 1;
inline constexpr int kHistogramBins = 10;

struct SampleScore {
  int fold = 0;
  std::string author;
  std::string task;
  std::string variant = "original";  // "original" or "transformed"
  int truth = 0;
  int predicted = 0;
  bool argmax_unique = true;
  double u_k = 0.0;
  bool k_anonymous = false;
  bool k_uncertain_at_eps = false;
  std::vector<double> confidences;
};

struct Exclusion {
  int fold = 0;
  std::string author;
  std::string task;
  std::string stage;  // "train" or "test"
  std::string reason;
};

struct Aggregates {
  double accuracy = 0.0;      // mean of fold accuracies
  double accuracy_std = 0.0;  // population std over folds
  double mean_uncertainty = 0.0;
  double k_uncertain_fraction = 0.0;
  double k_anonymous_fraction = 0.0;
};

struct UncertaintyReport {
  std::map<std::string, std::string> config;  // echo of the run settings
  std::vector<std::string> authors;
  int k = 5;
  double eps = 0.0;
  std::vector<SampleScore> per_sample;
  std::vector<double> fold_accuracies;
  Aggregates aggregates;
  std::array<int, kHistogramBins> histogram{};
  std::vector<Exclusion> exclusions;
};

// Bin i covers [i/10, (i+1)/10); the last bin also holds 1.0.
std::array<int, kHistogramBins> BuildHistogram(std::span<const double> scores);

// Fills u_k and both predicates of every sample from its stored confidences.
void ScoreSamples(UncertaintyReport& report, int k, double eps);

// Recomputes fold_accuracies, aggregates and histogram from per_sample.
void Aggregate(UncertaintyReport& report);

std::string ReportToJson(const UncertaintyReport& report);
UncertaintyReport ReportFromJson(const std::string& json);
void SaveReport(const UncertaintyReport& report, const std::filesystem::path& path);
UncertaintyReport LoadReport(const std::filesystem::path& path);

// One header line plus one row of aggregate columns.
std::string ReportCsvHeader();
std::string ReportCsvRow(const UncertaintyReport& report);

}  // namespace anonybench::anonmetrics

#endif  // ANONYBENCH_ANONMETRICS_REPORT_H_
