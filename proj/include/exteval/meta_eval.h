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

// Meta-evaluation of a metric against human labels over an N documents x
// S systems grid:
//
//   example level  one correlation over all N*S summaries;
//   system level   correlation of the S per-system means;
//   summary level  mean over documents of the correlation across the S
//                  systems, skipping documents where it is undefined.
//
// Missing cells (NaN) drop the affected pairs and are counted in n_skipped.

#ifndef EXTEVAL_META_EVAL_H_
#define EXTEVAL_META_EVAL_H_

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "exteval/annotations.h"
#include "exteval/common.h"
#include "exteval/correlation.h"
#include "exteval/csv.h"
#include "exteval/metric_table.h"

namespace exteval {

class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::vector<std::string> doc_ids,
              std::vector<std::string> system_ids)
      : doc_ids_(std::move(doc_ids)),
        system_ids_(std::move(system_ids)),
        values_(doc_ids_.size() * system_ids_.size(),
                std::numeric_limits<double>::quiet_NaN()) {
    CheckUnique(doc_ids_, "document");
    CheckUnique(system_ids_, "system");
  }

  const std::vector<std::string>& doc_ids() const { return doc_ids_; }
  const std::vector<std::string>& system_ids() const { return system_ids_; }
  std::size_t num_docs() const { return doc_ids_.size(); }
  std::size_t num_systems() const { return system_ids_.size(); }

  double at(std::size_t doc, std::size_t system) const {
    return values_[doc * system_ids_.size() + system];
  }
  void set(std::size_t doc, std::size_t system, double v) {
    values_[doc * system_ids_.size() + system] = v;
  }
  bool present(std::size_t doc, std::size_t system) const {
    return !std::isnan(at(doc, system));
  }

  bool SameShape(const ScoreMatrix& other) const {
    return doc_ids_ == other.doc_ids_ && system_ids_ == other.system_ids_;
  }

 private:
  static void CheckUnique(const std::vector<std::string>& ids,
                          const char* what) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::kDimensionMismatch,
                    std::string("duplicate ") + what + " id " + id);
      }
    }
  }

  std::vector<std::string> doc_ids_;
  std::vector<std::string> system_ids_;
  std::vector<double> values_;
};

// Grid view of a table in its oriented (higher-is-worse) form.
inline ScoreMatrix MatrixFromTable(const MetricTable& table,
                                   const std::vector<std::string>& doc_ids,
                                   const std::vector<std::string>& system_ids) {
  const MetricTable oriented = Orient(table);
  ScoreMatrix m(doc_ids, system_ids);
  for (std::size_t d = 0; d < doc_ids.size(); ++d) {
    for (std::size_t s = 0; s < system_ids.size(); ++s) {
      if (auto v = oriented.Get(doc_ids[d], system_ids[s])) m.set(d, s, *v);
    }
  }
  return m;
}

// Human target: one error type, or Overall when `type` is unset.
inline ScoreMatrix MatrixFromLabels(const std::vector<HumanJudgment>& labels,
                                    const std::vector<std::string>& doc_ids,
                                    const std::vector<std::string>& system_ids,
                                    std::optional<ErrorType> type) {
  std::map<std::string, std::size_t> doc_index;
  std::map<std::string, std::size_t> sys_index;
  for (std::size_t i = 0; i < doc_ids.size(); ++i) doc_index[doc_ids[i]] = i;
  for (std::size_t i = 0; i < system_ids.size(); ++i) sys_index[system_ids[i]] = i;
  ScoreMatrix m(doc_ids, system_ids);
  for (const auto& j : labels) {
    auto d = doc_index.find(j.doc_id);
    auto s = sys_index.find(j.system_id);
    if (d == doc_index.end() || s == sys_index.end()) continue;
    m.set(d->second, s->second,
          type ? static_cast<double>(j.label(*type))
               : static_cast<double>(OverallFromLabels(j)));
  }
  return m;
}

namespace internal {

inline void CheckShapes(const ScoreMatrix& metric, const ScoreMatrix& human) {
  if (!metric.SameShape(human)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "metric is " + std::to_string(metric.num_docs()) + "x" +
                    std::to_string(metric.num_systems()) + ", human is " +
                    std::to_string(human.num_docs()) + "x" +
                    std::to_string(human.num_systems()) +
                    " (or ids differ)");
  }
}

}  // namespace internal

inline CorrelationResult ExampleLevel(const ScoreMatrix& metric,
                                      const ScoreMatrix& human,
                                      Measure measure) {
  internal::CheckShapes(metric, human);
  std::vector<double> x;
  std::vector<double> y;
  std::size_t skipped = 0;
  for (std::size_t d = 0; d < metric.num_docs(); ++d) {
    for (std::size_t s = 0; s < metric.num_systems(); ++s) {
      if (!metric.present(d, s) || !human.present(d, s)) {
        ++skipped;
        continue;
      }
      x.push_back(metric.at(d, s));
      y.push_back(human.at(d, s));
    }
  }
  CorrelationResult r = Correlate(measure, x, y);
  r.n_skipped = skipped;
  return r;
}

// Per-system means over the documents where both cells are present.
inline std::pair<std::vector<double>, std::vector<double>> SystemMeans(
    const ScoreMatrix& metric, const ScoreMatrix& human,
    std::size_t* skipped_cells = nullptr) {
  internal::CheckShapes(metric, human);
  std::vector<double> mx;
  std::vector<double> hx;
  std::size_t skipped = 0;
  for (std::size_t s = 0; s < metric.num_systems(); ++s) {
    double msum = 0.0;
    double hsum = 0.0;
    std::size_t n = 0;
    for (std::size_t d = 0; d < metric.num_docs(); ++d) {
      if (!metric.present(d, s) || !human.present(d, s)) {
        ++skipped;
        continue;
      }
      msum += metric.at(d, s);
      hsum += human.at(d, s);
      ++n;
    }
    if (n == 0) continue;
    mx.push_back(msum / static_cast<double>(n));
    hx.push_back(hsum / static_cast<double>(n));
  }
  if (skipped_cells) *skipped_cells = skipped;
  return {mx, hx};
}

inline CorrelationResult SystemLevel(const ScoreMatrix& metric,
                                     const ScoreMatrix& human,
                                     Measure measure) {
  std::size_t skipped = 0;
  auto [mx, hx] = SystemMeans(metric, human, &skipped);
  CorrelationResult r = Correlate(measure, mx, hx);
  r.n_skipped = skipped;
  return r;
}

// Throws kAllSkipped when no document yields a defined correlation.
inline CorrelationResult SummaryLevel(const ScoreMatrix& metric,
                                      const ScoreMatrix& human,
                                      Measure measure) {
  internal::CheckShapes(metric, human);
  double sum = 0.0;
  std::size_t defined = 0;
  std::size_t skipped = 0;
  for (std::size_t d = 0; d < metric.num_docs(); ++d) {
    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t s = 0; s < metric.num_systems(); ++s) {
      if (!metric.present(d, s) || !human.present(d, s)) continue;
      x.push_back(metric.at(d, s));
      y.push_back(human.at(d, s));
    }
    const CorrelationResult r = Correlate(measure, x, y);
    if (!r.defined()) {
      ++skipped;
      continue;
    }
    sum += *r.value;
    ++defined;
  }
  if (defined == 0) {
    throw Error(ErrorCode::kAllSkipped,
                "every document has an ill-defined correlation (" +
                    std::to_string(skipped) + " skipped)");
  }
  CorrelationResult out;
  out.measure = measure;
  out.value = sum / static_cast<double>(defined);
  out.n_pairs = defined;
  out.n_skipped = skipped;
  return out;
}

enum class Level { kExample, kSystem, kSummary };

inline const char* LevelName(Level l) {
  switch (l) {
    case Level::kExample: return "example";
    case Level::kSystem: return "system";
    case Level::kSummary: return "summary";
  }
  return "";
}

// Like the level functions, but AllSkipped becomes an undefined result.
inline CorrelationResult CorrelateAtLevel(Level level, const ScoreMatrix& metric,
                                          const ScoreMatrix& human,
                                          Measure measure) {
  switch (level) {
    case Level::kExample:
      return ExampleLevel(metric, human, measure);
    case Level::kSystem:
      return SystemLevel(metric, human, measure);
    case Level::kSummary:
      try {
        return SummaryLevel(metric, human, measure);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kAllSkipped) throw;
        CorrelationResult r;
        r.measure = measure;
        r.n_skipped = metric.num_docs();
        r.notes = "AllSkipped";
        return r;
      }
  }
  return {};
}

struct MetaEvalRow {
  std::string metric;
  bool negated = false;
  std::string target;  // error type name or "overall"
  Level level = Level::kExample;
  CorrelationResult result;
};

inline std::vector<MetaEvalRow> MetaEvaluate(
    const MetricTable& table, const std::vector<HumanJudgment>& labels,
    const std::vector<std::string>& doc_ids,
    const std::vector<std::string>& system_ids) {
  const ScoreMatrix metric = MatrixFromTable(table, doc_ids, system_ids);
  std::vector<std::pair<std::string, std::optional<ErrorType>>> targets;
  for (ErrorType t : kAllErrorTypes) targets.emplace_back(ErrorTypeName(t), t);
  targets.emplace_back("overall", std::nullopt);
  std::vector<MetaEvalRow> rows;
  for (const auto& [name, type] : targets) {
    const ScoreMatrix human =
        MatrixFromLabels(labels, doc_ids, system_ids, type);
    for (Level level : {Level::kExample, Level::kSystem, Level::kSummary}) {
      for (Measure m : {Measure::kPearson, Measure::kSpearman}) {
        rows.push_back(MetaEvalRow{
            table.metric_name,
            table.orientation == Orientation::kHigherIsBetter, name, level,
            CorrelateAtLevel(level, metric, human, m)});
      }
    }
  }
  return rows;
}

inline void WriteMetaEvalReport(std::ostream& out,
                                const std::vector<MetaEvalRow>& rows) {
  csv::WriteRow(out, {"metric", "negated", "target", "level", "measure",
                      "value", "n_pairs", "n_skipped", "notes"});
  for (const auto& row : rows) {
    const auto& r = row.result;
    csv::WriteRow(out, {row.metric, row.negated ? "1" : "0", row.target,
                        LevelName(row.level), MeasureName(r.measure),
                        r.value ? csv::FormatDouble(*r.value) : "NA",
                        std::to_string(r.n_pairs), std::to_string(r.n_skipped),
                        r.notes});
  }
}

// Human error counts per system (one row per system, in `system_ids`
// order).
inline void WriteErrorsBySystem(std::ostream& out,
                                const std::vector<HumanJudgment>& labels,
                                const std::vector<std::string>& system_ids) {
  csv::Row header = {"system_id", "n_summaries"};
  for (ErrorType t : kAllErrorTypes) header.push_back(ErrorTypeName(t));
  header.push_back("any_error");
  header.push_back("mean_overall");
  csv::WriteRow(out, header);
  for (const auto& sys : system_ids) {
    std::array<int, 5> counts{};
    int n = 0;
    int any = 0;
    double overall = 0.0;
    for (const auto& j : labels) {
      if (j.system_id != sys) continue;
      ++n;
      for (int k = 0; k < 5; ++k) counts[k] += j.labels[k];
      const int o = OverallFromLabels(j);
      any += o > 0 ? 1 : 0;
      overall += o;
    }
    csv::Row row = {sys, std::to_string(n)};
    for (int c : counts) row.push_back(std::to_string(c));
    row.push_back(std::to_string(any));
    row.push_back(n ? csv::FormatDouble(overall / n) : "NA");
    csv::WriteRow(out, row);
  }
}

}  // namespace exteval

#endif  // EXTEVAL_META_EVAL_H_
