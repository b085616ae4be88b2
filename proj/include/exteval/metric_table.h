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

// Per-summary score tables for metrics computed elsewhere, and the
// orientation convention: every table is compared with human labels in its
// higher-is-worse view.

#ifndef EXTEVAL_METRIC_TABLE_H_
#define EXTEVAL_METRIC_TABLE_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "exteval/common.h"
#include "exteval/csv.h"

namespace exteval {

enum class Orientation { kHigherIsWorse, kHigherIsBetter };

inline const char* OrientationName(Orientation o) {
  return o == Orientation::kHigherIsWorse ? "higher_is_worse"
                                          : "higher_is_better";
}

inline std::optional<Orientation> ParseOrientation(std::string_view s) {
  if (s == "higher_is_worse" || s == "worse") return Orientation::kHigherIsWorse;
  if (s == "higher_is_better" || s == "better") {
    return Orientation::kHigherIsBetter;
  }
  return std::nullopt;
}

using CellKey = std::pair<std::string, std::string>;  // (doc_id, system_id)

struct MetricTable {
  std::string metric_name;
  Orientation orientation = Orientation::kHigherIsWorse;
  std::map<CellKey, double> scores;

  std::optional<double> Get(const std::string& doc_id,
                            const std::string& system_id) const {
    auto it = scores.find({doc_id, system_id});
    if (it == scores.end()) return std::nullopt;
    return it->second;
  }
};

struct IngestResult {
  MetricTable table;
  // Cells of the doc x system grid (spanned by the ids seen in the file, or
  // by the expected ids when given) that have no score.
  std::vector<CellKey> missing;
};

// Reads a doc_id,system_id,score CSV. Duplicate cells and non-numeric scores
// are errors; absent cells are reported, not filled.
inline IngestResult IngestExternalScores(
    std::istream& in, std::string metric_name, Orientation orientation,
    const std::string& where,
    const std::vector<std::string>* expected_docs = nullptr,
    const std::vector<std::string>* expected_systems = nullptr) {
  auto rows = csv::Read(in);
  if (rows.empty() ||
      rows[0] != std::vector<std::string>{"doc_id", "system_id", "score"}) {
    throw Error(ErrorCode::kSchemaError,
                where + ": header must be doc_id,system_id,score");
  }
  IngestResult result;
  result.table.metric_name = std::move(metric_name);
  result.table.orientation = orientation;
  std::vector<std::string> docs;
  std::vector<std::string> systems;
  std::map<std::string, bool> seen_doc;
  std::map<std::string, bool> seen_sys;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string line = where + ":" + std::to_string(r + 1);
    if (row.size() != 3) {
      throw Error(ErrorCode::kSchemaError, line + ": expected 3 columns");
    }
    auto value = csv::ParseDouble(row[2]);
    if (!value) {
      throw Error(ErrorCode::kNonNumeric,
                  line + ": score \"" + row[2] + "\" is not a number");
    }
    if (!result.table.scores.emplace(CellKey{row[0], row[1]}, *value).second) {
      throw Error(ErrorCode::kDuplicateCell,
                  line + ": duplicate cell " + row[0] + "/" + row[1]);
    }
    if (!seen_doc[row[0]]) {
      seen_doc[row[0]] = true;
      docs.push_back(row[0]);
    }
    if (!seen_sys[row[1]]) {
      seen_sys[row[1]] = true;
      systems.push_back(row[1]);
    }
  }
  const auto& grid_docs = expected_docs ? *expected_docs : docs;
  const auto& grid_systems = expected_systems ? *expected_systems : systems;
  for (const auto& d : grid_docs) {
    for (const auto& s : grid_systems) {
      if (!result.table.scores.count({d, s})) result.missing.emplace_back(d, s);
    }
  }
  return result;
}

// Higher-is-worse view. Idempotent.
inline MetricTable Orient(const MetricTable& table) {
  if (table.orientation == Orientation::kHigherIsWorse) return table;
  MetricTable out = table;
  out.orientation = Orientation::kHigherIsWorse;
  for (auto& [key, v] : out.scores) v = -v;
  return out;
}

inline void WriteMetricTable(std::ostream& out, const MetricTable& table) {
  csv::WriteRow(out, {"doc_id", "system_id", "score"});
  for (const auto& [key, v] : table.scores) {
    csv::WriteRow(out, {key.first, key.second, csv::FormatDouble(v)});
  }
}

}  // namespace exteval

#endif  // EXTEVAL_METRIC_TABLE_H_
