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

// Subcommands operating on single sources or corpus directories.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "anonybench/corpus/corpus.h"
#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/error.h"
#include "anonybench/features/analyze.h"
#include "anonybench/features/features.h"
#include "anonybench/harness/synthetic.h"
#include "anonybench/normalize/clues.h"
#include "anonybench/normalize/rules.h"
#include "anonybench/normalize/transformer.h"
#include "commands.h"

namespace anonybench::tools {
namespace {

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string Preprocessed(const std::string& file) {
  return corpus::PreprocessSource(ReadFile(file));
}

void AddCorpus(CLI::App& app, Action& action) {
  auto* corpus_cmd = app.add_subcommand("corpus", "Inspect an author/task corpus");
  corpus_cmd->require_subcommand(1);
  auto* check = corpus_cmd->add_subcommand("check", "Print the author x task matrix and warnings");
  auto root = std::make_shared<std::string>();
  check->add_option("root", *root, "Corpus root (<root>/<author>/<task>.c)")->required();
  check->callback([&action, root] {
    action = [root] {
      corpus::Corpus c = corpus::LoadCorpus(*root);
      std::cout << c.programs().size() << " programs, " << c.authors().size() << " authors, "
                << c.tasks().size() << " tasks\n";
      std::cout << c.CoverageMatrix();
      for (const std::string& w : c.warnings()) std::cerr << "warning: " << w << "\n";
    };
  });
}

void AddSynth(CLI::App& app, Action& action) {
  struct Args {
    int authors = 10;
    int tasks = 8;
    std::uint64_t seed = 7;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("synth", "Generate a synthetic author/task corpus");
  cmd->add_option("--authors", args->authors, "Number of authors")->capture_default_str();
  cmd->add_option("--tasks", args->tasks, "Number of tasks")->capture_default_str();
  cmd->add_option("--seed", args->seed, "Generator seed")->capture_default_str();
  cmd->add_option("--out", args->out, "Output corpus root")->required();
  cmd->callback([&action, args] {
    action = [args] {
      corpus::Corpus c = harness::GenerateSyntheticCorpus(args->authors, args->tasks, args->seed);
      corpus::WriteCorpus(c, args->out);
      std::cout << "wrote " << c.programs().size() << " programs to " << args->out << "\n";
    };
  });
}

void AddFmt(CLI::App& app, Action& action) {
  auto file = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand("fmt", "Print the canonical form of a C file");
  cmd->add_option("file", *file, "C source file")->required();
  cmd->callback([&action, file] {
    action = [file] { Emit("", cparse::Print(cparse::ParseSource(Preprocessed(*file)))); };
  });
}

void AddExtract(CLI::App& app, Action& action) {
  auto file = std::make_shared<std::string>();
  auto json = std::make_shared<bool>(false);
  auto* cmd = app.add_subcommand("extract", "Extract the stylometric feature vector");
  cmd->add_option("file", *file, "C source file")->required();
  cmd->add_flag("--json", *json, "Emit JSON with code regions (default: one feature per line)");
  cmd->callback([&action, file, json] {
    action = [file, json] {
      features::ProgramView view = features::AnalyzeSource(Preprocessed(*file));
      if (!view.parsed) std::cerr << "warning: parse failed, lexical features only\n";
      if (*json) {
        Emit("", features::ToJson(view.features));
        return;
      }
      for (const auto& [id, w] : view.features.weights) {
        std::cout << features::ToString(id) << "\t" << w << "\n";
      }
    };
  });
}

void AddNormalize(CLI::App& app, Action& action) {
  struct Args {
    std::string file;
    std::vector<std::string> rules;
    int max_iterations = 10;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("normalize", "Apply the code normalization rules");
  cmd->add_option("file", args->file, "C source file")->required();
  cmd->add_option("--rule", args->rules,
                  "Apply only these rules, once each, in the given order");
  cmd->add_option("--max-iterations", args->max_iterations, "Fixed point iteration cap")
      ->capture_default_str();
  cmd->add_option("-o,--out", args->out, "Output file (default: stdout)");
  cmd->callback([&action, args] {
    action = [args] {
      std::string source = Preprocessed(args->file);
      if (args->rules.empty()) {
        normalize::NormalizeOptions options;
        options.max_iterations = args->max_iterations;
        Emit(args->out, normalize::NormalizeSource(source, options));
        return;
      }
      cparse::Ast ast = cparse::ParseSource(source);
      for (const std::string& name : args->rules) {
        ast = normalize::ApplyRule(ast, normalize::ParseRule(name));
      }
      Emit(args->out, cparse::Print(ast));
    };
  });
}

void AddDeclue(CLI::App& app, Action& action) {
  struct Args {
    std::string file;
    int min_string_len = 32;
    std::string headers = "std";
    std::string decoys;
    bool no_pad = false;
    bool keep_cast_params = false;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("declue", "Apply the clue-elimination transformations");
  cmd->add_option("file", args->file, "C source file")->required();
  cmd->add_option("--min-string-len", args->min_string_len,
                  "Pad string literals to at least this many characters")
      ->capture_default_str();
  cmd->add_option("--headers", args->headers,
                  "Header superset: 'std', 'none' or a comma separated list")
      ->capture_default_str();
  cmd->add_option("--decoys", args->decoys, "File with one decoy function prototype per line");
  cmd->add_flag("--no-pad", args->no_pad, "Do not pad string literals");
  cmd->add_flag("--keep-cast-params", args->keep_cast_params,
                "Keep parameter names in function pointer casts");
  cmd->add_option("-o,--out", args->out, "Output file (default: stdout)");
  cmd->callback([&action, args] {
    action = [args] {
      normalize::ClueOptions options;
      options.pad_strings = !args->no_pad;
      options.min_string_len = args->min_string_len;
      if (args->headers == "none") {
        options.replace_headers = false;
        options.headers.clear();
      } else if (args->headers != "std") {
        options.headers = SplitList(args->headers);
      }
      if (!args->decoys.empty()) options.decoys = normalize::LoadDecoyList(args->decoys);
      options.strip_cast_params = !args->keep_cast_params;
      Emit(args->out, normalize::EliminateCluesSource(Preprocessed(args->file), options));
    };
  });
}

void AddXform(CLI::App& app, Action& action) {
  struct Args {
    std::string file;
    std::string command;
    int timeout_ms = 60000;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("xform", "Run an external source-to-source transformer");
  cmd->add_option("file", args->file, "C source file")->required();
  cmd->add_option("--cmd", args->command,
                  "Shell command; {in} and {out} expand to file paths, otherwise "
                  "stdin and stdout are used")
      ->required();
  cmd->add_option("--timeout-ms", args->timeout_ms, "Kill the command after this long")
      ->capture_default_str();
  cmd->add_option("-o,--out", args->out, "Output file (default: stdout)");
  cmd->callback([&action, args] {
    action = [args] {
      normalize::TransformerSpec spec;
      spec.kind = normalize::TransformerKind::kExternalCommand;
      spec.command_template = args->command;
      spec.timeout = std::chrono::milliseconds(args->timeout_ms);
      Emit(args->out, normalize::TransformSource(Preprocessed(args->file), spec));
    };
  });
}

}  // namespace

void AddSourceCommands(CLI::App& app, Action& action) {
  AddCorpus(app, action);
  AddSynth(app, action);
  AddFmt(app, action);
  AddExtract(app, action);
  AddNormalize(app, action);
  AddDeclue(app, action);
  AddXform(app, action);
}

}  // namespace anonybench::tools
