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


#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "anonybench/anonmetrics/report.h"
#include "anonybench/attribution/model.h"
#include "anonybench/corpus/corpus.h"
#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/features/analyze.h"
#include "anonybench/normalize/clues.h"
#include "anonybench/normalize/rules.h"
#include "test_util.h"

namespace anonybench {
namespace {

using testing::ReadTestdata;
using testing::ReadText;
using testing::Shell;
using testing::ShellResult;
using testing::TempDir;
using testing::TestdataPath;

std::string Q(const std::string& s) { return "'" + s + "'"; }

ShellResult Cli(const std::string& args) {
  return Shell(Q(ANONYBENCH_CLI_PATH) + " " + args + " 2>/dev/null");
}

ShellResult CliStderr(const std::string& args) {
  return Shell(Q(ANONYBENCH_CLI_PATH) + " " + args + " 2>&1 >/dev/null");
}

std::string Gcd1() { return TestdataPath("gcd/gcd1.c").string(); }

TEST(CliTest, FmtPrintsCanonicalForm) {
  ShellResult r = Cli("fmt " + Q(Gcd1()));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            cparse::Print(cparse::ParseSource(corpus::PreprocessSource(ReadTestdata("gcd/gcd1.c")))));
}

TEST(CliTest, ExtractJsonMatchesLibrary) {
  ShellResult r = Cli("extract --json " + Q(Gcd1()));
  ASSERT_EQ(r.exit_code, 0);
  auto view = features::AnalyzeSource(corpus::PreprocessSource(ReadTestdata("gcd/gcd1.c")));
  EXPECT_EQ(nlohmann::json::parse(r.output), nlohmann::json::parse(features::ToJson(view.features)));
}

TEST(CliTest, NormalizeAndDeclueMatchLibrary) {
  const std::string pre = corpus::PreprocessSource(ReadTestdata("gcd/gcd2.c"));
  ShellResult all = Cli("normalize " + TestdataPath("gcd/gcd2.c").string());
  ASSERT_EQ(all.exit_code, 0);
  EXPECT_EQ(all.output, normalize::NormalizeSource(pre));

  TempDir dir;
  testing::WriteText(dir / "a.c", "int main(void) { int a = 1; a += 2; return a; }\n");
  ShellResult rule = Cli("normalize --rule compound-assign " + Q((dir / "a.c").string()));
  ASSERT_EQ(rule.exit_code, 0);
  EXPECT_NE(rule.output.find("a = a + 2;"), std::string::npos) << rule.output;

  ShellResult declue = Cli("declue " + Q(TestdataPath("gcd/gcd2.c").string()));
  ASSERT_EQ(declue.exit_code, 0);
  EXPECT_EQ(declue.output, normalize::EliminateCluesSource(pre, {}));

  testing::WriteText(dir / "cast.c",
                     "int f(int x) { return x; }\n"
                     "int main(void) { void *p = (void *)f; return ((int (*)(int filedes))p)(1); }\n");
  ShellResult cast = Cli("declue --no-pad " + Q((dir / "cast.c").string()));
  ASSERT_EQ(cast.exit_code, 0);
  EXPECT_NE(cast.output.find("((int (*)(int))p)(1)"), std::string::npos) << cast.output;
}

TEST(CliTest, ExternalTransformers) {
  ShellResult cat = Cli("xform --cmd cat " + Q(Gcd1()));
  ASSERT_EQ(cat.exit_code, 0);
  EXPECT_EQ(cat.output, corpus::PreprocessSource(ReadTestdata("gcd/gcd1.c")));

  // The builtin normalizer wrapped as an external command agrees with the
  // library.
  ShellResult wrapped =
      Cli("xform --cmd " + Q(Q(ANONYBENCH_CLI_PATH) + " normalize {in}") + " " + Q(Gcd1()));
  ASSERT_EQ(wrapped.exit_code, 0);
  EXPECT_EQ(wrapped.output,
            normalize::NormalizeSource(corpus::PreprocessSource(ReadTestdata("gcd/gcd1.c"))));

  TempDir dir;
  ShellResult to_file = Cli("xform --cmd " + Q("cp {in} {out}") + " -o " +
                            Q((dir / "out.c").string()) + " " + Q(Gcd1()));
  ASSERT_EQ(to_file.exit_code, 0);
  EXPECT_EQ(ReadText(dir / "out.c"), corpus::PreprocessSource(ReadTestdata("gcd/gcd1.c")));

  EXPECT_EQ(Cli("xform --cmd false " + Q(Gcd1())).exit_code, 1);
}

TEST(CliTest, ErrorsUseOnePrefixAndExitOne) {
  TempDir dir;
  testing::WriteText(dir / "bad.c", "int main(void) { char *s = \"x; }\n");
  ShellResult r = CliStderr("fmt " + Q((dir / "bad.c").string()));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.output, "anonybench: lex error: unterminated string literal at line 1\n");
  ShellResult missing = CliStderr("fmt /nonexistent/x.c");
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_EQ(missing.output.rfind("anonybench: ingestion error: ", 0), 0u) << missing.output;
  EXPECT_NE(Cli("no-such-command").exit_code, 0);
}

class CliCorpusTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = (dir_ / "corpus").string();
    model_ = (dir_ / "model.json").string();
    ASSERT_EQ(Cli("synth --authors 3 --tasks 3 --seed 2 --out " + Q(corpus_)).exit_code, 0);
    ASSERT_EQ(Cli("train " + Q(corpus_) + " --trees 20 --out " + Q(model_)).exit_code, 0);
  }
  std::string Program() const { return corpus_ + "/author01/t1_gcd.c"; }

  TempDir dir_;
  std::string corpus_;
  std::string model_;
};

TEST_F(CliCorpusTest, SynthAndCheck) {
  corpus::Corpus c = corpus::LoadCorpus(corpus_);
  EXPECT_EQ(c.programs().size(), 9u);
  ShellResult r = Cli("corpus check " + Q(corpus_));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("9 programs, 3 authors, 3 tasks"), std::string::npos);
}

TEST_F(CliCorpusTest, AttributeMatchesSavedModel) {
  ShellResult r = Cli("attribute --json " + Q(model_) + " " + Q(Program()));
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.output);
  attribution::ModelBundle bundle = attribution::LoadModel(model_);
  auto view = features::AnalyzeSource(corpus::PreprocessSource(ReadText(Program())));
  auto c = bundle.model.Predict(features::ApplyPipeline(bundle.pipeline, view.features));
  ASSERT_EQ(j["confidences"].size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(j["confidences"][i].get<double>(), c[i]);
  EXPECT_EQ(j["predicted"], bundle.authors[static_cast<std::size_t>(c.Argmax())]);
}

TEST_F(CliCorpusTest, ExplainCommands) {
  const std::string html = (dir_ / "h.html").string();
  ShellResult h = Cli("explain highlight --json --author author01 --html " + Q(html) + " " + Q(model_) +
                      " " + Q(Program()));
  ASSERT_EQ(h.exit_code, 0);
  auto hj = nlohmann::json::parse(h.output);
  EXPECT_EQ(hj["target_author"], 1);
  EXPECT_NE(ReadText(html).find("<!DOCTYPE html>"), std::string::npos);

  ShellResult o = Cli("explain occlude --json --author author01 --model " + Q(model_) + " " + Q(Program()));
  ASSERT_EQ(o.exit_code, 0);
  auto oj = nlohmann::json::parse(o.output);
  EXPECT_EQ(oj["target_author"], 1);
  EXPECT_GT(oj["segments"].size(), 0u);
}

TEST_F(CliCorpusTest, EvalAndScore) {
  const std::string report = (dir_ / "r.json").string();
  const std::string csv = (dir_ / "r.csv").string();
  ShellResult e = Cli("eval " + Q(corpus_) + " --trees 20 --technique normalize --out " +
                      Q(report) + " --csv " + Q(csv));
  ASSERT_EQ(e.exit_code, 0);
  anonmetrics::UncertaintyReport r = anonmetrics::LoadReport(report);
  EXPECT_EQ(r.per_sample.size(), 9u);
  EXPECT_EQ(r.config.at("technique"), "normalize");
  std::string rows = ReadText(csv);
  EXPECT_EQ(rows.rfind("scenario,technique,learner,k,", 0), 0u);
  EXPECT_NE(rows.find("\nstatic,normalize,forest,5,"), std::string::npos);

  const std::string rescored = (dir_ / "r2.json").string();
  ASSERT_EQ(Cli("score " + Q(report) + " --k 2 --out " + Q(rescored)).exit_code, 0);
  anonmetrics::UncertaintyReport r2 = anonmetrics::LoadReport(rescored);
  EXPECT_EQ(r2.k, 2);
  EXPECT_GE(r2.aggregates.mean_uncertainty, r.aggregates.mean_uncertainty);
  EXPECT_EQ(r2.aggregates.accuracy, r.aggregates.accuracy);

  ShellResult synth = Cli("eval --synthetic --synth-authors 3 --synth-tasks 2 --trees 5");
  EXPECT_EQ(synth.exit_code, 0);
}

}  // namespace
}  // namespace anonybench
