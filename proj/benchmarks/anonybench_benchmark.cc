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


#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "anonybench/anonmetrics/uncertainty.h"
#include "anonybench/attribution/model.h"
#include "anonybench/corpus/preprocess.h"
#include "anonybench/cparse/lexer.h"
#include "anonybench/cparse/parser.h"
#include "anonybench/features/analyze.h"
#include "anonybench/features/pipeline.h"
#include "anonybench/harness/synthetic.h"
#include "anonybench/normalize/rules.h"

namespace anonybench {
namespace {

const corpus::Corpus& Synthetic() {
  static const corpus::Corpus c = harness::GenerateSyntheticCorpus(10, 8, 7);
  return c;
}

std::string SampleSource() {
  return corpus::PreprocessSource(Synthetic().programs().front().source);
}

void BM_Lex(benchmark::State& state) {
  const std::string src = SampleSource();
  for (auto _ : state) benchmark::DoNotOptimize(cparse::Lex(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Lex);

void BM_Parse(benchmark::State& state) {
  const std::string src = SampleSource();
  for (auto _ : state) benchmark::DoNotOptimize(cparse::ParseSource(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Parse);

void BM_Normalize(benchmark::State& state) {
  const std::string src = SampleSource();
  for (auto _ : state) benchmark::DoNotOptimize(normalize::NormalizeSource(src));
}
BENCHMARK(BM_Normalize);

void BM_Extract(benchmark::State& state) {
  const std::string src = SampleSource();
  for (auto _ : state) benchmark::DoNotOptimize(features::AnalyzeSource(src));
}
BENCHMARK(BM_Extract);

void BM_TrainForest(benchmark::State& state) {
  std::vector<features::FeatureVector> fvs;
  std::vector<int> labels;
  for (const auto& p : Synthetic().programs()) {
    fvs.push_back(features::AnalyzeSource(corpus::PreprocessSource(p.source)).features);
    labels.push_back(Synthetic().AuthorIndex(p.author));
  }
  const auto pipeline = features::FitPipeline(fvs, labels, features::kDefaultSelectionSize);
  attribution::Matrix x;
  for (const auto& fv : fvs) x.push_back(features::ApplyPipeline(pipeline, fv));
  attribution::TrainOptions options;
  options.forest.n_trees = static_cast<int>(state.range(0));
  options.forest.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(attribution::Train(x, labels, 10, options, 1));
}
BENCHMARK(BM_TrainForest)->Arg(50)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_UncertaintyScore(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<double> c(static_cast<std::size_t>(n));
  double sum = 0;
  for (double& v : c) sum += v = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
  for (double& v : c) v /= sum;
  for (auto _ : state) benchmark::DoNotOptimize(anonmetrics::UncertaintyScore(0, c, 5));
}
BENCHMARK(BM_UncertaintyScore)->Arg(10)->Arg(30)->Arg(204);

}  // namespace
}  // namespace anonybench

BENCHMARK_MAIN();
