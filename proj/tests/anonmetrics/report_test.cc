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

#include <numeric>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "anonybench/anonmetrics/uncertainty.h"
#include "anonybench/error.h"
#include "test_util.h"

namespace anonybench::anonmetrics {
namespace {

UncertaintyReport RandomReport(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  UncertaintyReport r;
  r.authors = {"a", "b", "c", "d"};
  r.config = {{"scenario", "static"}, {"technique", "cmd:tool --x, \"y\""}, {"learner", "forest"}};
  for (int fold = 0; fold < 3; ++fold) {
    for (int i = 0; i < 4 + fold; ++i) {
      SampleScore s;
      s.fold = fold;
      s.author = r.authors[i % 4];
      s.task = "t" + std::to_string(fold);
      s.variant = i % 2 ? "transformed" : "original";
      s.truth = i % 4;
      std::vector<double> c(4);
      double sum = 0;
      for (double& x : c) sum += x = 0.05 + (rng() % 100) / 100.0;
      for (double& x : c) x /= sum;
      s.confidences = c;
      s.predicted = static_cast<int>(std::max_element(c.begin(), c.end()) - c.begin());
      r.per_sample.push_back(s);
    }
  }
  r.exclusions.push_back({1, "a", "t1", "test", "transformer error: boom"});
  return r;
}

TEST(HistogramTest, BinEdges) {
  std::vector<double> scores = {0.0, 0.05, 0.1, 0.55, 0.999, 1.0};
  auto h = BuildHistogram(scores);
  EXPECT_EQ(h[0], 2);
  EXPECT_EQ(h[1], 1);
  EXPECT_EQ(h[5], 1);
  EXPECT_EQ(h[9], 2);
  EXPECT_EQ(std::accumulate(h.begin(), h.end(), 0), 6);
}

TEST(ReportTest, ScoreAndAggregateRecomputeFromSamples) {
  UncertaintyReport r = RandomReport(1);
  ScoreSamples(r, 3, 0.2);
  Aggregate(r);
  // Independent recomputation.
  double acc_sum = 0;
  std::vector<double> fold_acc;
  for (int fold = 0; fold < 3; ++fold) {
    int correct = 0, total = 0;
    for (const auto& s : r.per_sample) {
      if (s.fold != fold) continue;
      ++total;
      correct += s.predicted == s.truth;
    }
    fold_acc.push_back(static_cast<double>(correct) / total);
    acc_sum += fold_acc.back();
  }
  const double mean_acc = acc_sum / 3;
  double var = 0;
  for (double a : fold_acc) var += (a - mean_acc) * (a - mean_acc);
  EXPECT_EQ(r.fold_accuracies, fold_acc);
  EXPECT_NEAR(r.aggregates.accuracy, mean_acc, 1e-15);
  EXPECT_NEAR(r.aggregates.accuracy_std, std::sqrt(var / 3), 1e-15);
  double u_sum = 0;
  int uncertain = 0, anonymous = 0;
  for (const auto& s : r.per_sample) {
    EXPECT_EQ(s.u_k, UncertaintyScore(s.truth, s.confidences, 3));
    EXPECT_EQ(s.k_uncertain_at_eps, IsKUncertain(s.confidences, s.truth, 3, 0.2));
    u_sum += s.u_k;
    uncertain += s.k_uncertain_at_eps;
    anonymous += s.k_anonymous;
  }
  const double n = static_cast<double>(r.per_sample.size());
  EXPECT_NEAR(r.aggregates.mean_uncertainty, u_sum / n, 1e-15);
  EXPECT_NEAR(r.aggregates.k_uncertain_fraction, uncertain / n, 1e-15);
  EXPECT_NEAR(r.aggregates.k_anonymous_fraction, anonymous / n, 1e-15);
  EXPECT_EQ(std::accumulate(r.histogram.begin(), r.histogram.end(), 0),
            static_cast<int>(r.per_sample.size()));
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.eps, 0.2);
}

TEST(ReportTest, NeighborhoodLargerThanAuthorsIsClamped) {
  UncertaintyReport r = RandomReport(2);
  ScoreSamples(r, 9, 0.0);
  for (const auto& s : r.per_sample) {
    EXPECT_EQ(s.u_k, UncertaintyScore(s.truth, s.confidences, 4));
  }
}

TEST(ReportTest, ScoreRejectsBadParameters) {
  UncertaintyReport r = RandomReport(3);
  EXPECT_THROW(ScoreSamples(r, 0, 0.1), Error);
  EXPECT_THROW(ScoreSamples(r, 2, -1.0), Error);
}

TEST(ReportJsonTest, RoundTrip) {
  UncertaintyReport r = RandomReport(4);
  ScoreSamples(r, 2, 0.25);
  Aggregate(r);
  std::string json = ReportToJson(r);
  UncertaintyReport q = ReportFromJson(json);
  EXPECT_EQ(ReportToJson(q), json);
  ASSERT_EQ(q.per_sample.size(), r.per_sample.size());
  for (std::size_t i = 0; i < q.per_sample.size(); ++i) {
    EXPECT_EQ(q.per_sample[i].confidences, r.per_sample[i].confidences);
    EXPECT_EQ(q.per_sample[i].u_k, r.per_sample[i].u_k);
    EXPECT_EQ(q.per_sample[i].variant, r.per_sample[i].variant);
  }
  EXPECT_EQ(q.config, r.config);
  EXPECT_EQ(q.histogram, r.histogram);
  ASSERT_EQ(q.exclusions.size(), 1u);
  EXPECT_EQ(q.exclusions[0].reason, "transformer error: boom");
  EXPECT_EQ(q.aggregates.accuracy, r.aggregates.accuracy);

  testing::TempDir dir;
  SaveReport(r, dir / "r.json");
  EXPECT_EQ(ReportToJson(LoadReport(dir / "r.json")), json);
}

TEST(ReportJsonTest, MalformedIsSchemaError) {
  try {
    ReportFromJson("{\"per_sample\": 3}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSchema);
  }
}

TEST(ReportCsvTest, RowMatchesHeaderAndQuotesFields) {
  UncertaintyReport r = RandomReport(5);
  ScoreSamples(r, 2, 0.25);
  Aggregate(r);
  std::string header = ReportCsvHeader();
  std::string row = ReportCsvRow(r);
  EXPECT_EQ(header.rfind("scenario,technique,", 0), 0u);
  EXPECT_NE(row.find("\"cmd:tool --x, \"\"y\"\"\""), std::string::npos) << row;
  // Count fields outside quotes.
  auto fields = [](const std::string& line) {
    int n = 1;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      if (ch == ',' && !quoted) ++n;
    }
    return n;
  };
  EXPECT_EQ(fields(row), fields(header));
}

}  // namespace
}  // namespace anonybench::anonmetrics
