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

// Subcommands that run experiments and score reports.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>

#include "anonybench/anonmetrics/report.h"
#include "anonybench/anonmetrics/uncertainty.h"
#include "anonybench/attribution/model.h"
#include "anonybench/corpus/corpus.h"
#include "anonybench/error.h"
#include "anonybench/harness/scenario.h"
#include "anonybench/harness/synthetic.h"
#include "anonybench/normalize/transformer.h"
#include "commands.h"

namespace anonybench::tools {
namespace {

std::optional<double> ParseEps(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    double eps = std::stod(text, &used);
    if (used == text.size()) return eps;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParameter, "eps must be a number or 'auto': " + text);
}

void PrintSummary(const anonmetrics::UncertaintyReport& r) {
  std::printf("accuracy %.4f (std %.4f), mean u_%d %.4f, k-uncertain %.4f, "
              "k-anonymous %.4f, %zu samples, %zu excluded\n",
              r.aggregates.accuracy, r.aggregates.accuracy_std, r.k,
              r.aggregates.mean_uncertainty, r.aggregates.k_uncertain_fraction,
              r.aggregates.k_anonymous_fraction, r.per_sample.size(), r.exclusions.size());
}

void AppendCsv(const std::string& path, const anonmetrics::UncertaintyReport& r) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::kIngestion, "cannot write " + path);
  if (fresh) out << anonmetrics::ReportCsvHeader() << "\n";
  out << anonmetrics::ReportCsvRow(r) << "\n";
}

void AddEval(CLI::App& app, Action& action) {
  struct Args {
    std::string corpus;
    bool synthetic = false;
    int synth_authors = 10;
    int synth_tasks = 8;
    std::uint64_t synth_seed = 7;
    std::string scenario = "static";
    std::string technique = "identity";
    std::string learner = "forest";
    int k = 5;
    std::string eps = "auto";
    std::uint64_t seed = 0;
    int trees = 300;
    int selection = features::kDefaultSelectionSize;
    unsigned threads = 0;
    int min_string_len = 32;
    std::string out;
    std::string csv;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("eval", "Run an attribution experiment over grouped folds");
  cmd->add_option("corpus", a->corpus, "Corpus root (<root>/<author>/<task>.c)");
  cmd->add_flag("--synthetic", a->synthetic, "Use a generated corpus instead of a directory");
  cmd->add_option("--synth-authors", a->synth_authors)->capture_default_str();
  cmd->add_option("--synth-tasks", a->synth_tasks)->capture_default_str();
  cmd->add_option("--synth-seed", a->synth_seed)->capture_default_str();
  cmd->add_option("--scenario", a->scenario,
                  "static, adaptive-augment or adaptive-xformed")
      ->capture_default_str();
  cmd->add_option("--technique", a->technique, "identity, normalize, declue or cmd:<template>")
      ->capture_default_str();
  cmd->add_option("--learner", a->learner, "forest or linear")->capture_default_str();
  cmd->add_option("--k", a->k, "Neighborhood size")->capture_default_str();
  cmd->add_option("--eps", a->eps, "k-uncertainty threshold or 'auto' (1/n)")
      ->capture_default_str();
  cmd->add_option("--seed", a->seed, "Training seed")->capture_default_str();
  cmd->add_option("--trees", a->trees, "Forest size")->capture_default_str();
  cmd->add_option("--features", a->selection, "Number of selected features")
      ->capture_default_str();
  cmd->add_option("--threads", a->threads, "Parallel folds (0: all cores)");
  cmd->add_option("--min-string-len", a->min_string_len, "String padding for declue")
      ->capture_default_str();
  cmd->add_option("--out", a->out, "Report JSON path");
  cmd->add_option("--csv", a->csv, "Append the aggregate row to this CSV file");
  cmd->callback([&action, a] {
    action = [a] {
      corpus::Corpus c;
      if (a->synthetic) {
        c = harness::GenerateSyntheticCorpus(a->synth_authors, a->synth_tasks, a->synth_seed);
      } else if (!a->corpus.empty()) {
        c = corpus::LoadCorpus(a->corpus);
      } else {
        throw Error(ErrorKind::kParameter, "give a corpus root or --synthetic");
      }
      harness::ScenarioConfig config;
      config.scenario = harness::ParseScenario(a->scenario);
      config.technique = normalize::ParseTechnique(a->technique);
      config.technique.clues.min_string_len = a->min_string_len;
      config.train.learner = attribution::ParseLearner(a->learner);
      config.train.forest.n_trees = a->trees;
      config.k = a->k;
      config.eps = ParseEps(a->eps);
      config.seed = a->seed;
      config.selection_size = a->selection;
      config.threads = a->threads;
      anonmetrics::UncertaintyReport report = harness::RunScenario(c, config);
      if (!a->out.empty()) anonmetrics::SaveReport(report, a->out);
      if (!a->csv.empty()) AppendCsv(a->csv, report);
      PrintSummary(report);
    };
  });
}

void AddScore(CLI::App& app, Action& action) {
  struct Args {
    std::string report;
    int k = 5;
    std::string eps = "auto";
    std::string out;
    bool csv = false;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("score", "Recompute uncertainty metrics of a report");
  cmd->add_option("report", a->report, "Report JSON")->required();
  cmd->add_option("--k", a->k, "Neighborhood size")->capture_default_str();
  cmd->add_option("--eps", a->eps, "k-uncertainty threshold or 'auto' (1/n)")
      ->capture_default_str();
  cmd->add_option("--out", a->out, "Write the rescored report here");
  cmd->add_flag("--csv", a->csv, "Print the aggregate CSV row instead of a summary");
  cmd->callback([&action, a] {
    action = [a] {
      if (a->k < 1) throw Error(ErrorKind::kParameter, "k must be at least 1");
      anonmetrics::UncertaintyReport report = anonmetrics::LoadReport(a->report);
      std::optional<double> eps = ParseEps(a->eps);
      const int n = static_cast<int>(report.authors.size());
      anonmetrics::ScoreSamples(report, a->k, eps ? *eps : anonmetrics::EpsilonThreshold(n));
      anonmetrics::Aggregate(report);
      report.config["k"] = std::to_string(a->k);
      report.config["eps"] = a->eps;
      if (!a->out.empty()) anonmetrics::SaveReport(report, a->out);
      if (a->csv) {
        std::printf("%s\n%s\n", anonmetrics::ReportCsvHeader().c_str(),
                    anonmetrics::ReportCsvRow(report).c_str());
      } else {
        PrintSummary(report);
      }
    };
  });
}

}  // namespace

void AddEvalCommands(CLI::App& app, Action& action) {
  AddEval(app, action);
  AddScore(app, action);
}

}  // namespace anonybench::tools
