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

#include "exteval/metric_table.h"

#include <sstream>

#include <gtest/gtest.h>

namespace exteval {
namespace {

IngestResult Ingest(const std::string& body, Orientation o,
                    const std::vector<std::string>* docs = nullptr,
                    const std::vector<std::string>* systems = nullptr) {
  std::istringstream in("doc_id,system_id,score\n" + body);
  return IngestExternalScores(in, "m", o, "m.csv", docs, systems);
}

ErrorCode CodeOf(const std::string& body) {
  try {
    Ingest(body, Orientation::kHigherIsWorse);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kUsage;
}

TEST(IngestTest, ReadsScoresAndReportsMissingCells) {
  const auto r = Ingest("d1,s1,0.5\nd1,s2,1\nd2,s1,-2\n",
                        Orientation::kHigherIsWorse);
  EXPECT_EQ(r.table.Get("d1", "s2"), 1.0);
  EXPECT_EQ(r.table.Get("d2", "s1"), -2.0);
  EXPECT_FALSE(r.table.Get("d2", "s2").has_value());
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0], (CellKey{"d2", "s2"}));
}

TEST(IngestTest, ExpectedIdsDefineTheGrid) {
  const std::vector<std::string> docs = {"d1", "d2"};
  const std::vector<std::string> systems = {"s1"};
  const auto r = Ingest("d1,s1,0.5\n", Orientation::kHigherIsWorse, &docs,
                        &systems);
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0], (CellKey{"d2", "s1"}));
}

TEST(IngestTest, RejectsDuplicatesGarbageAndBadHeaders) {
  EXPECT_EQ(CodeOf("d,s,1\nd,s,2\n"), ErrorCode::kDuplicateCell);
  EXPECT_EQ(CodeOf("d,s,high\n"), ErrorCode::kNonNumeric);
  EXPECT_EQ(CodeOf("d,s,NaN\n"), ErrorCode::kNonNumeric);
  EXPECT_EQ(CodeOf("d,s\n"), ErrorCode::kSchemaError);
  std::istringstream bad("doc,system,value\n");
  EXPECT_THROW(IngestExternalScores(bad, "m", Orientation::kHigherIsWorse, "x"),
               Error);
}

TEST(OrientTest, NegatesHigherIsBetterAndIsIdempotent) {
  const auto r = Ingest("d,s,0.25\nd,t,-1\n", Orientation::kHigherIsBetter);
  const MetricTable once = Orient(r.table);
  EXPECT_EQ(once.orientation, Orientation::kHigherIsWorse);
  EXPECT_EQ(once.Get("d", "s"), -0.25);
  EXPECT_EQ(once.Get("d", "t"), 1.0);
  const MetricTable twice = Orient(once);
  EXPECT_EQ(twice.scores, once.scores);
  const auto worse = Ingest("d,s,0.25\n", Orientation::kHigherIsWorse);
  EXPECT_EQ(Orient(worse.table).scores, worse.table.scores);
}

TEST(OrientationTest, ParsesNamesAndShortForms) {
  EXPECT_EQ(ParseOrientation("higher_is_better"), Orientation::kHigherIsBetter);
  EXPECT_EQ(ParseOrientation("worse"), Orientation::kHigherIsWorse);
  EXPECT_FALSE(ParseOrientation("up").has_value());
}

TEST(WriteMetricTableTest, WritesSortedRowsThatReadBack) {
  const auto r = Ingest("d2,s1,3\nd1,s1,0.1\n", Orientation::kHigherIsWorse);
  std::ostringstream out;
  WriteMetricTable(out, r.table);
  EXPECT_EQ(out.str(), "doc_id,system_id,score\nd1,s1,0.1\nd2,s1,3\n");
}

}  // namespace
}  // namespace exteval
