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

// Subcommands that train, apply and explain attribution models.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "anonybench/attribution/model.h"
#include "anonybench/corpus/corpus.h"
#include "anonybench/corpus/preprocess.h"
#include "anonybench/error.h"
#include "anonybench/explain/highlight.h"
#include "anonybench/explain/occlude.h"
#include "anonybench/features/analyze.h"
#include "anonybench/harness/scenario.h"
#include "anonybench/normalize/transformer.h"
#include "commands.h"

namespace anonybench::tools {
namespace {

int ArgMax(const std::vector<double>& v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  return best;
}

int ResolveTarget(const attribution::ModelBundle& bundle, const std::string& author,
                  const std::vector<double>& confidences) {
  if (author.empty()) return ArgMax(confidences);
  for (std::size_t i = 0; i < bundle.authors.size(); ++i) {
    if (bundle.authors[i] == author) return static_cast<int>(i);
  }
  throw Error(ErrorKind::kParameter, "author not known to the model: " + author);
}

// Canonical text when the program parses, otherwise preprocessed text.
std::string ProgramText(const std::string& file) {
  std::string pre = corpus::PreprocessSource(ReadFile(file));
  features::ProgramView view = features::AnalyzeSource(pre);
  return view.parsed ? view.text : pre;
}

void AddTrain(CLI::App& app, Action& action) {
  struct Args {
    std::string corpus;
    std::string learner = "forest";
    std::uint64_t seed = 0;
    int trees = 300;
    int selection = features::kDefaultSelectionSize;
    unsigned threads = 0;
    std::string technique = "identity";
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("train", "Train an attribution model on a whole corpus");
  cmd->add_option("corpus", args->corpus, "Corpus root (<root>/<author>/<task>.c)")->required();
  cmd->add_option("--learner", args->learner, "forest or linear")->capture_default_str();
  cmd->add_option("--seed", args->seed, "Training seed")->capture_default_str();
  cmd->add_option("--trees", args->trees, "Forest size")->capture_default_str();
  cmd->add_option("--features", args->selection, "Number of selected features")
      ->capture_default_str();
  cmd->add_option("--threads", args->threads, "Worker threads (0: all cores)");
  cmd->add_option("--technique", args->technique,
                  "Transform the training programs first (identity, normalize, declue, cmd:...)")
      ->capture_default_str();
  cmd->add_option("--out", args->out, "Model JSON path")->required();
  cmd->callback([&action, args] {
    action = [args] {
      attribution::TrainOptions options;
      options.learner = attribution::ParseLearner(args->learner);
      options.forest.n_trees = args->trees;
      options.forest.threads = args->threads;
      corpus::Corpus c = corpus::LoadCorpus(args->corpus);
      attribution::ModelBundle bundle = harness::TrainBundle(
          c, options, args->seed, args->selection, normalize::ParseTechnique(args->technique));
      attribution::SaveModel(bundle, args->out);
      std::cout << "trained " << attribution::LearnerName(options.learner) << " on "
                << c.programs().size() << " programs (" << bundle.pipeline.dimension()
                << " features), saved " << args->out << "\n";
    };
  });
}

void AddAttribute(CLI::App& app, Action& action) {
  struct Args {
    std::string model;
    std::string file;
    bool json = false;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("attribute", "Print the confidence vector for a C file");
  cmd->add_option("model", args->model, "Model JSON")->required();
  cmd->add_option("file", args->file, "C source file")->required();
  cmd->add_flag("--json", args->json, "Emit JSON");
  cmd->callback([&action, args] {
    action = [args] {
      attribution::ModelBundle bundle = attribution::LoadModel(args->model);
      std::vector<double> c = explain::ModelAttributor(bundle)(ReadFile(args->file));
      int best = ArgMax(c);
      if (args->json) {
        std::ostringstream os;
        os.precision(17);
        os << "{\"authors\": [";
        for (std::size_t i = 0; i < c.size(); ++i) {
          os << (i ? ", " : "") << '"' << bundle.authors[i] << '"';
        }
        os << "], \"confidences\": [";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
        os << "], \"predicted\": \"" << bundle.authors[static_cast<std::size_t>(best)] << "\"}";
        Emit("", os.str());
        return;
      }
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::printf("%-24s %.6f\n", bundle.authors[i].c_str(), c[i]);
      }
      std::printf("predicted: %s\n", bundle.authors[static_cast<std::size_t>(best)].c_str());
    };
  });
}

void AddExplain(CLI::App& app, Action& action) {
  auto* explain_cmd = app.add_subcommand("explain", "Explain an attribution");
  explain_cmd->require_subcommand(1);

  struct HighlightArgs {
    std::string model;
    std::string file;
    std::string author;
    std::string html;
    bool json = false;
  };
  auto h = std::make_shared<HighlightArgs>();
  auto* highlight =
      explain_cmd->add_subcommand("highlight", "Relevant code regions from forest paths");
  highlight->add_option("model", h->model, "Forest model JSON")->required();
  highlight->add_option("file", h->file, "C source file")->required();
  highlight->add_option("--author", h->author, "Target author (default: predicted)");
  highlight->add_option("--html", h->html, "Write a shaded HTML rendering");
  highlight->add_flag("--json", h->json, "Emit the relevance map as JSON");
  highlight->callback([&action, h] {
    action = [h] {
      attribution::ModelBundle bundle = attribution::LoadModel(h->model);
      features::ProgramView view =
          features::AnalyzeSource(corpus::PreprocessSource(ReadFile(h->file)));
      std::vector<double> x = features::ApplyPipeline(bundle.pipeline, view.features);
      int target = ResolveTarget(bundle, h->author, bundle.model.Predict(x).values());
      explain::RelevanceMap map = explain::Highlight(bundle.model, bundle.pipeline, view, target);
      if (!h->html.empty()) {
        WriteFile(h->html, explain::RenderHtml(view.text, map,
                                               h->file + " for " +
                                                   bundle.authors[static_cast<std::size_t>(target)]));
      }
      if (h->json) {
        Emit("", explain::RelevanceToJson(map));
      } else if (h->html.empty()) {
        std::istringstream lines(view.text);
        std::string line;
        for (std::size_t i = 0; std::getline(lines, line); ++i) {
          double r = i < map.line_relevance.size() ? map.line_relevance[i] : 0.0;
          std::printf("%+9.5f | %s\n", r, line.c_str());
        }
      }
    };
  });

  struct OccludeArgs {
    std::string model;
    std::string file;
    std::string xform = "identity";
    std::string author;
    unsigned threads = 0;
    bool json = false;
  };
  auto o = std::make_shared<OccludeArgs>();
  auto* occlude = explain_cmd->add_subcommand("occlude", "Per-line relevance by occlusion");
  occlude->add_option("--model", o->model, "Model JSON")->required();
  occlude->add_option("file", o->file, "C source file")->required();
  occlude->add_option("--xform", o->xform,
                      "Anonymizer applied to every occluded variant "
                      "(identity, normalize, declue, cmd:...)")
      ->capture_default_str();
  occlude->add_option("--author", o->author, "Target author (default: predicted)");
  occlude->add_option("--threads", o->threads, "Worker threads (0: all cores)");
  occlude->add_flag("--json", o->json, "Emit JSON");
  occlude->callback([&action, o] {
    action = [o] {
      attribution::ModelBundle bundle = attribution::LoadModel(o->model);
      explain::Attributor attributor = explain::ModelAttributor(bundle);
      normalize::TransformerSpec spec = normalize::ParseTechnique(o->xform);
      std::string text = ProgramText(o->file);
      int target = ResolveTarget(
          bundle, o->author, attributor(normalize::TransformSource(text, spec)));
      explain::OcclusionOptions options;
      options.threads = o->threads;
      explain::OcclusionResult result = explain::Occlude(text, attributor, spec, target, options);
      if (o->json) {
        Emit("", explain::OcclusionToJson(result));
        return;
      }
      std::printf("target %s, baseline confidence %.6f, %d skipped\n",
                  bundle.authors[static_cast<std::size_t>(target)].c_str(), result.baseline,
                  result.skipped());
      for (const explain::Segment& s : result.segments) {
        std::string line = s.text;
        if (!line.empty() && line.back() == '\n') line.pop_back();
        if (s.status == explain::SegmentStatus::kScored) {
          std::printf("%+9.5f | %s\n", s.relevance, line.c_str());
        } else {
          std::printf("  skipped | %s\n", line.c_str());
        }
      }
    };
  });
}

}  // namespace

void AddModelCommands(CLI::App& app, Action& action) {
  AddTrain(app, action);
  AddAttribute(app, action);
  AddExplain(app, action);
}

}  // namespace anonybench::tools
