// Copyright 2026 The ExtEval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exteval/meta_eval.h"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.h"

namespace exteval {
namespace {

using ::exteval::testing::oracle::NaivePearson;
using ::exteval::testing::oracle::NaiveSpearman;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ScoreMatrix Matrix(const std::vector<std::vector<double>>& rows) {
  std::vector<std::string> docs, systems;
  for (std::size_t d = 0; d < rows.size(); ++d) docs.push_back("d" + std::to_string(d));
  for (std::size_t s = 0; s < rows[0].size(); ++s) systems.push_back("s" + std::to_string(s));
  ScoreMatrix m(docs, systems);
  for (std::size_t d = 0; d < rows.size(); ++d) {
    for (std::size_t s = 0; s < rows[d].size(); ++s) m.set(d, s, rows[d][s]);
  }
  return m;
}

TEST(ScoreMatrixTest, RejectsDuplicateIds) {
  try {
    ScoreMatrix m({"d", "d"}, {"s"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(MetaEvalTest, ShapesMustAgree) {
  const auto a = Matrix({{1, 2}, {3, 4}});
  const auto b = Matrix({{1, 2, 3}, {3, 4, 5}});
  EXPECT_THROW(ExampleLevel(a, b, Measure::kPearson), Error);
}

TEST(MetaEvalTest, ExampleLevelFlattensAllCells) {
  const auto m = Matrix({{1, 2, 0}, {3, 1, 2}});
  const auto h = Matrix({{0, 2, 1}, {2, 0, 1}});
  const std::vector<double> x = {1, 2, 0, 3, 1, 2};
  const std::vector<double> y = {0, 2, 1, 2, 0, 1};
  EXPECT_NEAR(*ExampleLevel(m, h, Measure::kPearson).value, NaivePearson(x, y),
              1e-12);
  EXPECT_NEAR(*ExampleLevel(m, h, Measure::kSpearman).value,
              NaiveSpearman(x, y), 1e-12);
  EXPECT_EQ(ExampleLevel(m, h, Measure::kPearson).n_pairs, 6u);
}

TEST(MetaEvalTest, SystemLevelCorrelatesSystemMeans) {
  const auto m = Matrix({{1, 2, 0}, {3, 1, 2}, {0, 0, 5}});
  const auto h = Matrix({{0, 2, 1}, {2, 0, 1}, {1, 1, 1}});
  // Column means by hand.
  const std::vector<double> mx = {4.0 / 3, 1.0, 7.0 / 3};
  const std::vector<double> hx = {1.0, 1.0, 1.0};
  auto [gm, gh] = SystemMeans(m, h);
  for (int s = 0; s < 3; ++s) {
    EXPECT_NEAR(gm[s], mx[s], 1e-15);
    EXPECT_NEAR(gh[s], hx[s], 1e-15);
  }
  // Constant human means: undefined.
  EXPECT_FALSE(SystemLevel(m, h, Measure::kPearson).defined());
}

// With one document per system row, system level is example level on the
// per-system means.
TEST(MetaEvalTest, SystemLevelEqualsExampleLevelOnMeans) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> mr(6, std::vector<double>(5));
    std::vector<std::vector<double>> hr(6, std::vector<double>(5));
    for (auto& r : mr) for (auto& v : r) v = u(rng);
    for (auto& r : hr) for (auto& v : r) v = std::floor(u(rng) * 3);
    const auto m = Matrix(mr);
    const auto h = Matrix(hr);
    auto [gm, gh] = SystemMeans(m, h);
    const auto means_m = Matrix({gm});
    const auto means_h = Matrix({gh});
    for (Measure meas : {Measure::kPearson, Measure::kSpearman}) {
      const auto sys = SystemLevel(m, h, meas);
      const auto ex = ExampleLevel(means_m, means_h, meas);
      ASSERT_EQ(sys.defined(), ex.defined());
      if (sys.defined()) EXPECT_EQ(*sys.value, *ex.value);
    }
  }
}

TEST(MetaEvalTest, SummaryLevelAveragesDefinedDocuments) {
  // d0: perfect agreement; d1: perfect disagreement; d2: constant human row.
  const auto m = Matrix({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  const auto h = Matrix({{0, 1, 2}, {2, 1, 0}, {1, 1, 1}});
  const auto r = SummaryLevel(m, h, Measure::kPearson);
  EXPECT_NEAR(*r.value, 0.0, 1e-15);
  EXPECT_EQ(r.n_pairs, 2u);
  EXPECT_EQ(r.n_skipped, 1u);
}

TEST(MetaEvalTest, SummaryLevelAllSkipped) {
  const auto m = Matrix({{1, 2}, {3, 4}});
  const auto h = Matrix({{1, 1}, {0, 0}});
  try {
    SummaryLevel(m, h, Measure::kSpearman);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllSkipped);
  }
  const auto r = CorrelateAtLevel(Level::kSummary, m, h, Measure::kSpearman);
  EXPECT_FALSE(r.defined());
  EXPECT_EQ(r.notes, "AllSkipped");
}

TEST(MetaEvalTest, MissingCellsAreDroppedAndCounted) {
  const auto m = Matrix({{1, kNaN, 3}, {2, 5, 1}});
  const auto h = Matrix({{0, 1, 2}, {1, 2, kNaN}});
  const auto r = ExampleLevel(m, h, Measure::kPearson);
  EXPECT_EQ(r.n_pairs, 4u);
  EXPECT_EQ(r.n_skipped, 2u);
  EXPECT_NEAR(*r.value, NaivePearson({1, 3, 2, 5}, {0, 2, 1, 2}), 1e-12);
}

TEST(MetaEvalTest, HigherIsBetterMetricsAreNegated) {
  const std::vector<std::string> docs = {"d0", "d1"};
  const std::vector<std::string> systems = {"a", "b"};
  std::vector<HumanJudgment> labels = {
      {"d0", "a", {1, 0, 0, 0, 0}, 1}, {"d0", "b", {0, 0, 0, 0, 0}, 0},
      {"d1", "a", {1, 1, 0, 0, 0}, 2}, {"d1", "b", {0, 0, 0, 0, 0}, 0}};
  MetricTable better{"quality", Orientation::kHigherIsBetter,
                     {{{"d0", "a"}, 0.1}, {{"d0", "b"}, 0.9},
                      {{"d1", "a"}, 0.2}, {{"d1", "b"}, 0.8}}};
  MetricTable worse = better;
  worse.orientation = Orientation::kHigherIsWorse;
  const auto rb = MetaEvaluate(better, labels, docs, systems);
  const auto rw = MetaEvaluate(worse, labels, docs, systems);
  ASSERT_EQ(rb.size(), 36u);
  for (std::size_t i = 0; i < rb.size(); ++i) {
    EXPECT_TRUE(rb[i].negated);
    ASSERT_EQ(rb[i].result.defined(), rw[i].result.defined());
    if (rb[i].result.defined()) {
      EXPECT_EQ(*rb[i].result.value, -*rw[i].result.value);
    }
  }
  // Overall at example level: low quality goes with many errors.
  const auto& overall_example = rb[30];
  EXPECT_EQ(overall_example.target, "overall");
  EXPECT_EQ(overall_example.level, Level::kExample);
  EXPECT_GT(*overall_example.result.value, 0.8);
}

TEST(MetaEvalTest, ReportListsEveryRowWithNaForUndefined) {
  const std::vector<std::string> docs = {"d0"};
  const std::vector<std::string> systems = {"a", "b"};
  std::vector<HumanJudgment> labels = {{"d0", "a", {1, 0, 0, 0, 0}, 1},
                                       {"d0", "b", {0, 0, 0, 0, 0}, 0}};
  MetricTable t{"m", Orientation::kHigherIsWorse,
                {{{"d0", "a"}, 1.0}, {{"d0", "b"}, 0.0}}};
  std::ostringstream out;
  WriteMetaEvalReport(out, MetaEvaluate(t, labels, docs, systems));
  std::istringstream in(out.str());
  const auto rows = csv::Read(in);
  ASSERT_EQ(rows.size(), 37u);
  EXPECT_EQ(rows[1][0], "m");
  EXPECT_EQ(rows[1][2], "incorrect_coref");
  EXPECT_NEAR(std::stod(rows[1][5]), 1.0, 1e-15);
  // incomplete_coref is all zero: undefined.
  EXPECT_EQ(rows[7][5], "NA");
}

TEST(MetaEvalTest, ErrorsBySystemCountsLabels) {
  std::vector<HumanJudgment> labels = {{"d0", "a", {1, 0, 0, 1, 0}, 2},
                                       {"d1", "a", {0, 0, 0, 1, 0}, 1},
                                       {"d0", "b", {0, 0, 0, 0, 0}, 0}};
  std::ostringstream out;
  WriteErrorsBySystem(out, labels, {"a", "b"});
  EXPECT_EQ(out.str(),
            "system_id,n_summaries,incorrect_coref,incomplete_coref,"
            "incorrect_discourse,incomplete_discourse,misleading,any_error,"
            "mean_overall\n"
            "a,2,1,0,0,2,0,2,1.5\n"
            "b,1,0,0,0,0,0,0,0\n");
}

}  // namespace
}  // namespace exteval
