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


#include "anonybench/normalize/transformer.h"

#include <chrono>
#include <string>

#include <gtest/gtest.h>

#include "anonybench/corpus/preprocess.h"
#include "anonybench/error.h"
#include "anonybench/normalize/clues.h"
#include "anonybench/normalize/rules.h"
#include "test_util.h"

namespace anonybench::normalize {
namespace {

const char kProgram[] = "int main(void) {\n  int a = 1; a += 2;\n  return a;\n}\n";

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInternal;
}

TEST(TechniqueTest, ParsesNames) {
  EXPECT_EQ(ParseTechnique("identity").kind, TransformerKind::kIdentity);
  EXPECT_EQ(ParseTechnique("normalize").kind, TransformerKind::kBuiltinNormalize);
  EXPECT_EQ(ParseTechnique("declue").kind, TransformerKind::kClueElimination);
  TransformerSpec cmd = ParseTechnique("cmd:tr a b");
  EXPECT_EQ(cmd.kind, TransformerKind::kExternalCommand);
  EXPECT_EQ(cmd.command_template, "tr a b");
  for (const char* name : {"identity", "normalize", "declue", "cmd:cat"}) {
    EXPECT_EQ(TechniqueName(ParseTechnique(name)), name);
  }
  EXPECT_TRUE(IsBuiltin(ParseTechnique("normalize")));
  EXPECT_TRUE(IsBuiltin(ParseTechnique("identity")));
  EXPECT_FALSE(IsBuiltin(ParseTechnique("cmd:cat")));
  EXPECT_EQ(KindOf([] { ParseTechnique("tigress"); }), ErrorKind::kParameter);
  EXPECT_EQ(KindOf([] { ParseTechnique("cmd:"); }), ErrorKind::kParameter);
}

TEST(TransformTest, BuiltinTechniques) {
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("identity")), kProgram);
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("normalize")), NormalizeSource(kProgram));
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("declue")), EliminateCluesSource(kProgram));
}

TEST(TransformTest, ProgramStageBecomesTransformed) {
  corpus::Program p;
  p.source = kProgram;
  p.author = "a";
  p.task = "t";
  p.stage = corpus::Stage::kPreprocessed;
  corpus::Program q = Transform(p, ParseTechnique("normalize"));
  EXPECT_EQ(q.stage, corpus::Stage::kTransformed);
  EXPECT_EQ(q.author, "a");
  EXPECT_EQ(q.source, NormalizeSource(kProgram));
}

TEST(ExternalTest, CatIsByteIdentical) {
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("cmd:cat")), kProgram);
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("cmd:cat {in}")), kProgram);
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("cmd:cp {in} {out}")), kProgram);
}

TEST(ExternalTest, OutputIsReturnedVerbatimEvenIfUnparseable) {
  EXPECT_EQ(TransformSource(kProgram, ParseTechnique("cmd:echo 'not C ('")), "not C (\n");
}

TEST(ExternalTest, EmptyOutputIsTransformerError) {
  EXPECT_EQ(KindOf([] { TransformSource(kProgram, ParseTechnique("cmd:cat > /dev/null")); }),
            ErrorKind::kTransformer);
  EXPECT_EQ(KindOf([] { TransformSource(kProgram, ParseTechnique("cmd:: > {out}")); }),
            ErrorKind::kTransformer);
}

TEST(ExternalTest, NonzeroExitCarriesDiagnostics) {
  try {
    TransformSource(kProgram, ParseTechnique("cmd:echo broken >&2; exit 3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTransformer);
    EXPECT_NE(std::string(e.what()).find("broken"), std::string::npos) << e.what();
  }
}

TEST(ExternalTest, TimeoutIsTransformerError) {
  TransformerSpec spec = ParseTechnique("cmd:sleep 5");
  spec.timeout = std::chrono::milliseconds(200);
  auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(KindOf([&] { TransformSource(kProgram, spec); }), ErrorKind::kTransformer);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(4));
}

TEST(ExternalTest, PathsWithSpacesAreQuoted) {
  EXPECT_EQ(ShellQuote("a b"), "'a b'");
  EXPECT_EQ(ShellQuote("it's"), "'it'\\''s'");
  testing::TempDir dir;
  CommandResult r = RunCommand("cat; echo done", "x\n", dir.path().string(),
                               std::chrono::milliseconds(5000));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.timed_out);
  EXPECT_EQ(r.stdout_text, "x\ndone\n");
}

TEST(ExternalTest, LargeInputDoesNotDeadlock) {
  std::string big;
  for (int i = 0; i < 20000; ++i) big += "int v" + std::to_string(i) + ";\n";
  EXPECT_EQ(TransformSource(big, ParseTechnique("cmd:cat")), big);
}

}  // namespace
}  // namespace anonybench::normalize
