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

#include "anonybench/corpus/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "anonybench/error.h"

namespace anonybench::corpus {

namespace fs = std::filesystem;

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kRaw: return "raw";
    case Stage::kPreprocessed: return "preprocessed";
    case Stage::kNormalized: return "normalized";
    case Stage::kTransformed: return "transformed";
  }
  return "?";
}

Corpus Corpus::Build(std::vector<Program> programs) {
  Corpus c;
  std::set<std::tuple<std::string, std::string, Stage>> seen;
  std::set<std::string> authors, tasks;
  for (const Program& p : programs) {
    if (p.source.empty()) {
      throw Error(ErrorKind::kSchema,
                  "empty source for " + p.author + "/" + p.task);
    }
    if (!seen.emplace(p.author, p.task, p.stage).second) {
      throw Error(ErrorKind::kSchema,
                  "duplicate program for author '" + p.author + "' task '" +
                      p.task + "'");
    }
    authors.insert(p.author);
    tasks.insert(p.task);
  }
  c.authors_.assign(authors.begin(), authors.end());
  c.tasks_.assign(tasks.begin(), tasks.end());
  c.programs_ = std::move(programs);
  std::stable_sort(c.programs_.begin(), c.programs_.end(),
                   [](const Program& a, const Program& b) {
                     return std::tie(a.author, a.task) < std::tie(b.author, b.task);
                   });
  std::set<std::pair<std::string, std::string>> cells;
  for (const Program& p : c.programs_) cells.emplace(p.author, p.task);
  for (const std::string& a : c.authors_) {
    for (const std::string& t : c.tasks_) {
      if (!cells.count({a, t})) {
        c.warnings_.push_back("author '" + a + "' lacks task '" + t + "'");
      }
    }
  }
  return c;
}

int Corpus::AuthorIndex(std::string_view author) const {
  auto it = std::lower_bound(authors_.begin(), authors_.end(), author);
  if (it == authors_.end() || *it != author) {
    throw Error(ErrorKind::kInput, "unknown author '" + std::string(author) + "'");
  }
  return static_cast<int>(it - authors_.begin());
}

std::string Corpus::CoverageMatrix() const {
  std::set<std::pair<std::string, std::string>> cells;
  for (const Program& p : programs_) cells.emplace(p.author, p.task);
  std::size_t width = 6;
  for (const auto& a : authors_) width = std::max(width, a.size());
  std::ostringstream out;
  out << std::string(width, ' ');
  for (const auto& t : tasks_) out << ' ' << t;
  out << '\n';
  for (const auto& a : authors_) {
    out << a << std::string(width - a.size(), ' ');
    for (const auto& t : tasks_) {
      std::string mark = cells.count({a, t}) ? "x" : ".";
      std::size_t pad = t.size() > 0 ? t.size() - 1 : 0;
      out << ' ' << std::string(pad / 2, ' ') << mark
          << std::string(pad - pad / 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIngestion, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIngestion, "cannot read " + path.string());
  return ss.str();
}

}  // namespace

Corpus LoadCorpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorKind::kIngestion, "not a directory: " + root.string());
  }
  std::vector<fs::path> author_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) author_dirs.push_back(entry.path());
  }
  if (author_dirs.empty()) {
    throw Error(ErrorKind::kIngestion, "no authors found in " + root.string());
  }
  std::sort(author_dirs.begin(), author_dirs.end());
  std::vector<Program> programs;
  for (const fs::path& dir : author_dirs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".c") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      Program p;
      p.source = ReadFile(file);
      if (p.source.empty()) {
        throw Error(ErrorKind::kIngestion, "empty source file " + file.string());
      }
      p.author = dir.filename().string();
      p.task = file.stem().string();
      programs.push_back(std::move(p));
    }
  }
  return Corpus::Build(std::move(programs));
}

void WriteCorpus(const Corpus& corpus, const fs::path& root) {
  for (const Program& p : corpus.programs()) {
    fs::path dir = root / p.author;
    fs::create_directories(dir);
    std::ofstream out(dir / (p.task + ".c"), std::ios::binary);
    out << p.source;
    if (!out) {
      throw Error(ErrorKind::kIngestion,
                  "cannot write " + (dir / (p.task + ".c")).string());
    }
  }
}

FoldPlan GroupedKFold(const Corpus& corpus) {
  const auto& tasks = corpus.tasks();
  if (tasks.size() < 2) {
    throw Error(ErrorKind::kParameter,
                "grouped k-fold needs at least two tasks, got " +
                    std::to_string(tasks.size()));
  }
  FoldPlan plan;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    Fold f;
    for (std::size_t j = 0; j < tasks.size(); ++j) {
      (i == j ? f.test_tasks : f.train_tasks).push_back(tasks[j]);
    }
    plan.folds.push_back(std::move(f));
  }
  return plan;
}

FoldSplit SplitFold(const Corpus& corpus, const Fold& fold) {
  std::set<std::string> test(fold.test_tasks.begin(), fold.test_tasks.end());
  std::set<std::string> train(fold.train_tasks.begin(), fold.train_tasks.end());
  FoldSplit split;
  const auto& programs = corpus.programs();
  for (std::size_t i = 0; i < programs.size(); ++i) {
    if (test.count(programs[i].task)) {
      split.test.push_back(i);
    } else if (train.count(programs[i].task)) {
      split.train.push_back(i);
    }
  }
  return split;
}

}  // namespace anonybench::corpus
