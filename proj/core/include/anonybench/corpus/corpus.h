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

#ifndef ANONYBENCH_CORPUS_CORPUS_H_
#define ANONYBENCH_CORPUS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace anonybench::corpus {

enum class Stage { kRaw, kPreprocessed, kNormalized, kTransformed };

std::string_view StageName(Stage stage);

struct Program {
  std::string source;
  std::string author;
  std::string task;
  Stage stage = Stage::kRaw;
};

// Programs grouped by author and task. `authors` and `tasks` are sorted, and
// an author's position in `authors` is the index used in confidence vectors.
class Corpus {
 public:
  Corpus() = default;

  // Validates the invariants: non-empty sources and unique
  // (author, task, stage) triples. Throws Error(kSchema) on duplicates.
  // Missing (author, task) cells only produce warnings.
  static Corpus Build(std::vector<Program> programs);

  const std::vector<Program>& programs() const { return programs_; }
  const std::vector<std::string>& authors() const { return authors_; }
  const std::vector<std::string>& tasks() const { return tasks_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Index of `author` in authors(); throws Error(kInput) if unknown.
  int AuthorIndex(std::string_view author) const;

  // Human readable author x task coverage matrix.
  std::string CoverageMatrix() const;

 private:
  std::vector<Program> programs_;
  std::vector<std::string> authors_;
  std::vector<std::string> tasks_;
  std::vector<std::string> warnings_;
};

// Reads `<root>/<author>/<task>.c`. Files with other extensions are ignored.
Corpus LoadCorpus(const std::filesystem::path& root);

// Writes the corpus back in the same layout (used by the synthetic
// generator).
void WriteCorpus(const Corpus& corpus, const std::filesystem::path& root);

struct Fold {
  std::vector<std::string> train_tasks;
  std::vector<std::string> test_tasks;
};

struct FoldPlan {
  std::vector<Fold> folds;
};

// One fold per task; fold i holds out tasks()[i]. Needs at least two tasks.
FoldPlan GroupedKFold(const Corpus& corpus);

// Program indices of the train and test side of `fold`.
struct FoldSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};
FoldSplit SplitFold(const Corpus& corpus, const Fold& fold);

}  // namespace anonybench::corpus

#endif  // ANONYBENCH_CORPUS_CORPUS_H_
