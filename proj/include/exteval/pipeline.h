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

// End-to-end commands behind the exteval CLI: validate, score, metaeval,
// inject and report. Each returns a process exit status (0 success,
// 1 validation or oracle failure, 2 usage error) and writes only
// deterministic, sorted output.

#ifndef EXTEVAL_PIPELINE_H_
#define EXTEVAL_PIPELINE_H_

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "exteval/annotations.h"
#include "exteval/common.h"
#include "exteval/corpus.h"
#include "exteval/csv.h"
#include "exteval/dataset.h"
#include "exteval/injector.h"
#include "exteval/lexicon.h"
#include "exteval/meta_eval.h"
#include "exteval/metric_table.h"
#include "exteval/rouge.h"
#include "exteval/submetrics.h"
#include "exteval/synthetic.h"

namespace exteval {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct MetricSource {
  fs::path path;  // a CSV file or a directory of them
  std::string name;
  std::optional<Orientation> orientation;
};

struct RunConfig {
  fs::path corpus_dir;
  fs::path annotations_dir;
  fs::path systems_dir;
  fs::path references_dir;
  fs::path labels_path;
  fs::path expected_path;  // injector expectations, checked by score
  std::vector<MetricSource> scores;
  fs::path output_dir = "exteval_out";
  std::vector<std::string> systems;  // empty: every system directory
  bool strict = false;
  bool use_sentiment = true;
  bool markdown = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;  // 0: hardware concurrency
  std::size_t lead_k = 3;
  std::size_t synthetic_docs = 0;
  Lexicon lexicon;

  // Fills unset paths from a dataset root laid out as in dataset.h.
  void SetDatasetRoot(const fs::path& root) {
    if (corpus_dir.empty()) corpus_dir = root / "corpus";
    if (annotations_dir.empty()) annotations_dir = root / "annotations";
    if (systems_dir.empty()) systems_dir = root / "systems";
    if (references_dir.empty()) references_dir = root / "references";
    if (labels_path.empty() && fs::exists(root / "labels" / "human.csv")) {
      labels_path = root / "labels" / "human.csv";
    }
    if (expected_path.empty() && fs::exists(root / "expected.csv")) {
      expected_path = root / "expected.csv";
    }
  }

  DatasetPaths paths() const {
    return {corpus_dir, annotations_dir, systems_dir, references_dir};
  }

  ExtEvalOptions ext_eval_options() const {
    return ExtEvalOptions{lexicon, use_sentiment};
  }
};

// Throws kUsage on an unusable configuration.
inline void CheckConfig(const RunConfig& config, bool needs_corpus) {
  if (needs_corpus && !fs::is_directory(config.corpus_dir)) {
    throw Error(ErrorCode::kUsage,
                "corpus directory \"" + config.corpus_dir.string() +
                    "\" does not exist (use --corpus or --dataset)");
  }
  const auto& lx = config.lexicon;
  if (lx.pronouns.empty() || lx.determiners.empty() ||
      lx.linking_terms.empty()) {
    throw Error(ErrorCode::kUsage, "word lists must not be empty");
  }
  try {
    std::regex check(lx.dateline_pattern);
  } catch (const std::regex_error& e) {
    throw Error(ErrorCode::kUsage,
                "invalid dateline_pattern: " + std::string(e.what()));
  }
}

inline Orientation DefaultOrientation(const std::string& metric) {
  static const std::set<std::string> kHigherIsBetter = {
      "rouge2_f1", "rouge",     "factcc",   "questeval",
      "bertscore", "bertscore_precision"};
  return kHigherIsBetter.count(metric) ? Orientation::kHigherIsBetter
                                       : Orientation::kHigherIsWorse;
}

// "path[:orientation]" as accepted by --scores.
inline MetricSource ParseMetricSource(const std::string& arg) {
  MetricSource src;
  std::string path = arg;
  if (auto colon = arg.rfind(':'); colon != std::string::npos) {
    if (auto o = ParseOrientation(arg.substr(colon + 1))) {
      src.orientation = o;
      path = arg.substr(0, colon);
    }
  }
  src.path = path;
  return src;
}

// Applies a JSON config object. Relative paths resolve against `base`.
inline void ApplyConfigJson(const nlohmann::json& j, const fs::path& base,
                            RunConfig& config) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kUsage, "config must be a JSON object");
  }
  auto path_of = [&](const char* key) {
    fs::path p = j[key].get<std::string>();
    return p.is_absolute() ? p : base / p;
  };
  auto strings = [&](const char* key) {
    if (!j[key].is_array()) {
      throw Error(ErrorCode::kUsage, std::string(key) + " must be a list");
    }
    std::vector<std::string> out;
    for (const auto& v : j[key]) {
      if (!v.is_string()) {
        throw Error(ErrorCode::kUsage,
                    std::string(key) + " must contain strings");
      }
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  static const std::set<std::string> kKnown = {
      "dataset",       "corpus",        "annotations",   "systems",
      "references",    "labels",        "expected",      "scores",
      "out",           "strict",        "strict_mode",   "seed",
      "jobs",          "use_sentiment", "markdown",      "lead_k",
      "pronoun_list",  "determiner_list", "linking_terms",
      "forward_linking_terms", "dateline_pattern", "synthetic_docs"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.count(key)) {
      throw Error(ErrorCode::kUsage, "unknown config key \"" + key + "\"");
    }
  }
  try {
    if (j.contains("corpus")) config.corpus_dir = path_of("corpus");
    if (j.contains("annotations")) config.annotations_dir = path_of("annotations");
    if (j.contains("references")) config.references_dir = path_of("references");
    if (j.contains("labels")) config.labels_path = path_of("labels");
    if (j.contains("expected")) config.expected_path = path_of("expected");
    if (j.contains("out")) config.output_dir = path_of("out");
    if (j.contains("systems")) {
      if (j["systems"].is_array()) {
        config.systems = strings("systems");
      } else {
        config.systems_dir = path_of("systems");
      }
    }
    if (j.contains("scores")) {
      for (const auto& s : j["scores"]) {
        MetricSource src;
        if (s.is_string()) {
          src = ParseMetricSource(s.get<std::string>());
        } else {
          src.path = s.at("path").get<std::string>();
          if (s.contains("name")) src.name = s["name"].get<std::string>();
          if (s.contains("orientation")) {
            src.orientation =
                ParseOrientation(s["orientation"].get<std::string>());
            if (!src.orientation) {
              throw Error(ErrorCode::kUsage, "unknown orientation in config");
            }
          }
        }
        if (src.path.is_relative()) src.path = base / src.path;
        config.scores.push_back(std::move(src));
      }
    }
    if (j.contains("strict")) config.strict = j["strict"].get<bool>();
    if (j.contains("strict_mode")) config.strict = j["strict_mode"].get<bool>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("jobs")) config.jobs = j["jobs"].get<std::size_t>();
    if (j.contains("lead_k")) config.lead_k = j["lead_k"].get<std::size_t>();
    if (j.contains("synthetic_docs")) {
      config.synthetic_docs = j["synthetic_docs"].get<std::size_t>();
    }
    if (j.contains("use_sentiment")) {
      config.use_sentiment = j["use_sentiment"].get<bool>();
    }
    if (j.contains("markdown")) config.markdown = j["markdown"].get<bool>();
    if (j.contains("pronoun_list")) config.lexicon.pronouns = strings("pronoun_list");
    if (j.contains("determiner_list")) {
      config.lexicon.determiners = strings("determiner_list");
    }
    if (j.contains("linking_terms")) {
      config.lexicon.linking_terms = strings("linking_terms");
    }
    if (j.contains("forward_linking_terms")) {
      config.lexicon.forward_linking_terms = strings("forward_linking_terms");
    }
    if (j.contains("dateline_pattern")) {
      config.lexicon.dateline_pattern = j["dateline_pattern"].get<std::string>();
    }
    if (j.contains("dataset")) config.SetDatasetRoot(path_of("dataset"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kUsage, std::string("config: ") + e.what());
  }
}

inline void LoadConfigFile(const fs::path& path, RunConfig& config) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kUsage, path.string() + ": " + e.what());
  }
  ApplyConfigJson(j, path.parent_path(), config);
}

// ---------------------------------------------------------------------------
// Per-document processing shared by validate and score.

struct SummaryRecord {
  std::string doc_id;
  std::string system_id;
  ExtEvalScore score;
  std::optional<double> rouge2;
};

struct Failure {
  std::string doc_id;
  std::string system_id;
  ErrorCode code;
  std::string message;
};

struct DocumentOutcome {
  std::vector<SummaryRecord> records;
  std::vector<Failure> failures;
  Diagnostics diagnostics;
  std::size_t summaries_seen = 0;
};

inline std::vector<std::string> SelectedSystems(const RunConfig& config) {
  auto all = ListSystems(config.systems_dir);
  if (config.systems.empty()) return all;
  std::vector<std::string> out;
  for (const auto& s : config.systems) {
    if (std::find(all.begin(), all.end(), s) != all.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Loads one document with its annotations and scores every system's
// summary of it. Failures are isolated per summary. With `validate_only`
// the scores are skipped and all checks still run.
inline DocumentOutcome ProcessDocument(const RunConfig& config,
                                       const std::string& doc_id,
                                       const std::vector<std::string>& systems) {
  DocumentOutcome out;
  const DatasetPaths paths = config.paths();
  const LoadOptions load{config.strict};

  Document doc;
  CorefAnnotation doc_coref;
  std::optional<SentimentAnnotation> doc_senti;
  std::optional<std::u32string> reference;
  try {
    doc = LoadDocument(paths, doc_id);
    doc_coref = LoadCoref(paths.DocCoref(doc_id), Scope::kDocument, doc.text,
                          load, &out.diagnostics);
    if (config.use_sentiment) {
      doc_senti = LoadSentiment(paths.DocSenti(doc_id), Scope::kDocument,
                                doc.sentences.size());
    }
    if (!config.references_dir.empty() &&
        fs::exists(paths.Reference(doc_id))) {
      reference = utf8::Decode(ReadFile(paths.Reference(doc_id)));
    }
  } catch (const Error& e) {
    out.failures.push_back({doc_id, "", e.code(), e.what()});
    return out;
  }

  for (const auto& sys : systems) {
    if (!fs::exists(paths.Summary(sys, doc_id))) continue;
    ++out.summaries_seen;
    try {
      AlignOptions align;
      align.strict = config.strict;
      const AlignedSummary aligned = AlignSummaryToDocument(
          LoadSummaryUnits(paths.Summary(sys, doc_id)), doc, sys, align,
          &out.diagnostics);
      const CorefAnnotation summary_coref =
          LoadCoref(paths.SummaryCoref(sys, doc_id), Scope::kSummary,
                    aligned.summary_text(), load, &out.diagnostics);
      std::optional<SentimentAnnotation> summary_senti;
      if (config.use_sentiment && fs::exists(paths.SummarySenti(sys, doc_id))) {
        summary_senti = LoadSentiment(paths.SummarySenti(sys, doc_id),
                                      Scope::kSummary, aligned.units().size());
      }
      SummaryAnnotations ann;
      ann.doc_coref = &doc_coref;
      ann.summary_coref = &summary_coref;
      ann.doc_senti = doc_senti ? &*doc_senti : nullptr;
      ann.summary_senti = summary_senti ? &*summary_senti : nullptr;
      SummaryRecord rec{doc_id, sys,
                        ExtEval(doc, aligned, ann, config.ext_eval_options(),
                                &out.diagnostics),
                        std::nullopt};
      if (reference) rec.rouge2 = Rouge2F1(aligned.summary_text(), *reference);
      out.records.push_back(std::move(rec));
    } catch (const Error& e) {
      out.failures.push_back({doc_id, sys, e.code(), e.what()});
    }
  }
  return out;
}

// Runs `fn(i)` for i in [0, n) on a small worker pool.
inline void ParallelFor(std::size_t n, std::size_t jobs,
                        const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

inline std::vector<DocumentOutcome> ProcessCorpus(const RunConfig& config) {
  const auto doc_ids = ListDocIds(config.corpus_dir);
  const auto systems = SelectedSystems(config);
  std::vector<DocumentOutcome> outcomes(doc_ids.size());
  ParallelFor(doc_ids.size(), config.jobs, [&](std::size_t i) {
    outcomes[i] = ProcessDocument(config, doc_ids[i], systems);
  });
  return outcomes;
}

// ---------------------------------------------------------------------------
// validate

inline bool IsErrorDiagnostic(const Diagnostic& d) {
  return d.code == ErrorCode::kSpanMismatch || d.code == ErrorCode::kSchemaError;
}

inline int CmdValidate(const RunConfig& config, std::ostream& report) {
  CheckConfig(config, true);
  const auto outcomes = ProcessCorpus(config);
  std::size_t errors = 0;
  std::size_t warnings = 0;
  std::size_t summaries = 0;
  for (const auto& o : outcomes) {
    summaries += o.summaries_seen;
    for (const auto& f : o.failures) {
      ++errors;
      report << "ERROR " << f.doc_id << (f.system_id.empty() ? "" : "/" + f.system_id)
             << ": " << f.message << "\n";
    }
    for (const auto& d : o.diagnostics) {
      if (IsErrorDiagnostic(d)) {
        ++errors;
        report << "ERROR " << d.ToString() << "\n";
      } else {
        ++warnings;
        report << "WARN " << d.ToString() << "\n";
      }
    }
  }
  if (!config.labels_path.empty()) {
    try {
      std::ifstream in(config.labels_path);
      if (!in) {
        throw Error(ErrorCode::kIoError,
                    "cannot read " + config.labels_path.string());
      }
      ReadHumanLabels(in, config.labels_path.string());
    } catch (const Error& e) {
      ++errors;
      report << "ERROR " << e.what() << "\n";
    }
  }
  report << "validated " << outcomes.size() << " documents, " << summaries
         << " summaries: " << errors << " errors, " << warnings
         << " warnings\n";
  if (errors > 0 || (config.strict && warnings > 0)) return kExitFailure;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Shared output helpers.

namespace internal {

inline std::string WriteCsvString(
    const std::function<void(std::ostream&)>& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

// Renders a CSV string as a GitHub-flavored markdown table.
inline std::string CsvToMarkdown(const std::string& title,
                                 const std::string& csv_text) {
  std::istringstream in(csv_text);
  const auto rows = csv::Read(in);
  std::ostringstream md;
  md << "# " << title << "\n\n";
  if (rows.empty()) return md.str();
  auto line = [&](const csv::Row& row) {
    md << "|";
    for (const auto& cell : row) md << " " << (cell.empty() ? " " : cell) << " |";
    md << "\n";
  };
  line(rows[0]);
  md << "|";
  for (std::size_t i = 0; i < rows[0].size(); ++i) md << "---|";
  md << "\n";
  for (std::size_t r = 1; r < rows.size(); ++r) line(rows[r]);
  return md.str();
}

inline void WriteReport(const RunConfig& config, const std::string& stem,
                        const std::string& title, const std::string& csv_text) {
  const fs::path dir = config.output_dir / "report";
  WriteFile(dir / (stem + ".csv"), csv_text);
  if (config.markdown) {
    WriteFile(dir / (stem + ".md"), CsvToMarkdown(title, csv_text));
  }
}

inline std::vector<HumanJudgment> LoadLabels(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return ReadHumanLabels(in, path.string());
}

inline std::string OptionalFlag(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace internal

// ---------------------------------------------------------------------------
// score

struct ExpectedFlags {
  std::string doc_id;
  std::string system_id;
  std::optional<int> incom_coref;
  std::optional<int> incom_disco;
};

inline const std::vector<std::string>& ExpectedHeader() {
  static const std::vector<std::string> kHeader = {
      "doc_id", "system_id", "incom_coref", "incom_disco", "seed", "note"};
  return kHeader;
}

inline std::vector<ExpectedFlags> ReadExpected(std::istream& in,
                                               const std::string& where) {
  const auto rows = csv::Read(in);
  if (rows.empty() || rows[0] != ExpectedHeader()) {
    throw Error(ErrorCode::kSchemaError,
                where + ": header must be doc_id,system_id,incom_coref,"
                        "incom_disco,seed,note");
  }
  auto flag = [&](const std::string& cell, std::size_t r) -> std::optional<int> {
    if (cell.empty()) return std::nullopt;
    if (cell == "0") return 0;
    if (cell == "1") return 1;
    throw Error(ErrorCode::kSchemaError, where + ":" + std::to_string(r + 1) +
                                             ": flag must be 0, 1 or empty");
  };
  std::vector<ExpectedFlags> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != ExpectedHeader().size()) {
      throw Error(ErrorCode::kSchemaError,
                  where + ":" + std::to_string(r + 1) + ": wrong column count");
    }
    out.push_back({rows[r][0], rows[r][1], flag(rows[r][2], r),
                   flag(rows[r][3], r)});
  }
  return out;
}

struct ScoreRun {
  std::vector<SummaryRecord> records;  // sorted by (doc_id, system_id)
  std::vector<Failure> failures;
  Diagnostics diagnostics;
};

inline ScoreRun ScoreCorpus(const RunConfig& config) {
  CheckConfig(config, true);
  ScoreRun run;
  for (auto& o : ProcessCorpus(config)) {
    for (auto& r : o.records) run.records.push_back(std::move(r));
    for (auto& f : o.failures) run.failures.push_back(std::move(f));
    for (auto& d : o.diagnostics) run.diagnostics.push_back(std::move(d));
  }
  return run;
}

// Writes results.jsonl, one CSV per score under scores/ and the failure
// report. Returns 1 when the injector oracle disagrees.
inline int CmdScore(const RunConfig& config, std::ostream& log) {
  const ScoreRun run = ScoreCorpus(config);
  const fs::path out = config.output_dir;

  std::string jsonl;
  for (const auto& r : run.records) {
    jsonl += ScoreToJson(r.doc_id, r.system_id, r.score).dump() + "\n";
  }
  WriteFile(out / "results.jsonl", jsonl);

  using Getter = std::function<std::optional<double>(const SummaryRecord&)>;
  const std::vector<std::pair<std::string, Getter>> columns = {
      {"exteval", [](const SummaryRecord& r) { return r.score.total; }},
      {"incor_coref_eval",
       [](const SummaryRecord& r) { return double(r.score.incor_coref.flag); }},
      {"incom_coref_eval",
       [](const SummaryRecord& r) { return double(r.score.incom_coref.flag); }},
      {"incom_disco_eval",
       [](const SummaryRecord& r) { return double(r.score.incom_disco.flag); }},
      {"senti_bias", [](const SummaryRecord& r) { return r.score.senti_bias; }},
      {"rouge2_f1", [](const SummaryRecord& r) { return r.rouge2; }},
  };
  for (const auto& [name, get] : columns) {
    MetricTable table;
    table.metric_name = name;
    table.orientation = DefaultOrientation(name);
    for (const auto& r : run.records) {
      if (auto v = get(r)) table.scores[{r.doc_id, r.system_id}] = *v;
    }
    if (table.scores.empty() && name == "rouge2_f1") continue;
    WriteFile(out / "scores" / (name + ".csv"),
              internal::WriteCsvString(
                  [&](std::ostream& o) { WriteMetricTable(o, table); }));
  }

  std::vector<Failure> failures = run.failures;
  std::sort(failures.begin(), failures.end(),
            [](const Failure& a, const Failure& b) {
              return std::tie(a.doc_id, a.system_id) <
                     std::tie(b.doc_id, b.system_id);
            });
  internal::WriteReport(
      config, "score_failures", "Score failures",
      internal::WriteCsvString([&](std::ostream& o) {
        csv::WriteRow(o, {"doc_id", "system_id", "error", "message"});
        for (const auto& f : failures) {
          csv::WriteRow(o, {f.doc_id, f.system_id, ErrorCodeName(f.code),
                            f.message});
        }
      }));
  std::string warnings;
  for (const auto& d : run.diagnostics) warnings += d.ToString() + "\n";
  WriteFile(out / "report" / "score_warnings.txt", warnings);

  log << "scored " << run.records.size() << " summaries, "
      << failures.size() << " failures, " << run.diagnostics.size()
      << " warnings\n";

  if (config.expected_path.empty()) return kExitOk;
  std::ifstream in(config.expected_path);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                "cannot read " + config.expected_path.string());
  }
  const auto expected = ReadExpected(in, config.expected_path.string());
  std::map<CellKey, const SummaryRecord*> by_cell;
  for (const auto& r : run.records) by_cell[{r.doc_id, r.system_id}] = &r;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  const std::string csv_text = internal::WriteCsvString([&](std::ostream& o) {
    csv::WriteRow(o, {"doc_id", "system_id", "field", "expected", "observed",
                      "match"});
    for (const auto& e : expected) {
      auto it = by_cell.find({e.doc_id, e.system_id});
      auto check = [&](const char* field, const std::optional<int>& want,
                       std::optional<int> got) {
        if (!want) return;
        ++checked;
        const bool ok = got && *got == *want;
        if (!ok) ++mismatches;
        csv::WriteRow(o, {e.doc_id, e.system_id, field, std::to_string(*want),
                          got ? std::to_string(*got) : "NA", ok ? "1" : "0"});
      };
      const SummaryRecord* r = it == by_cell.end() ? nullptr : it->second;
      check("incom_coref", e.incom_coref,
            r ? std::optional<int>(r->score.incom_coref.flag) : std::nullopt);
      check("incom_disco", e.incom_disco,
            r ? std::optional<int>(r->score.incom_disco.flag) : std::nullopt);
    }
  });
  internal::WriteReport(config, "oracle_agreement", "Oracle agreement",
                        csv_text);
  log << "oracle agreement: " << (checked - mismatches) << "/" << checked
      << "\n";
  return mismatches == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// metaeval

// Expands directories to their sorted *.csv files and fills names and
// orientations.
inline std::vector<MetricSource> ResolveMetricSources(
    const std::vector<MetricSource>& sources, std::ostream& log) {
  std::vector<MetricSource> out;
  for (const auto& src : sources) {
    std::vector<fs::path> files;
    if (fs::is_directory(src.path)) {
      for (const auto& e : fs::directory_iterator(src.path)) {
        if (e.is_regular_file() && e.path().extension() == ".csv") {
          files.push_back(e.path());
        }
      }
      std::sort(files.begin(), files.end());
    } else if (fs::exists(src.path)) {
      files.push_back(src.path);
    } else {
      throw Error(ErrorCode::kUsage,
                  "scores path \"" + src.path.string() + "\" does not exist");
    }
    for (const auto& f : files) {
      MetricSource m = src;
      m.path = f;
      if (m.name.empty() || files.size() > 1) m.name = f.stem().string();
      if (!m.orientation) {
        m.orientation = DefaultOrientation(m.name);
        static const std::set<std::string> kKnown = {
            "rouge2_f1", "rouge", "factcc", "questeval", "bertscore",
            "bertscore_precision", "dae", "exteval", "incor_coref_eval",
            "incom_coref_eval", "incom_disco_eval", "senti_bias"};
        if (!kKnown.count(m.name)) {
          log << "warning: no orientation given for " << m.name
              << ", assuming higher_is_worse\n";
        }
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

inline int CmdMetaeval(const RunConfig& config, std::ostream& log) {
  if (config.labels_path.empty()) {
    throw Error(ErrorCode::kUsage, "metaeval needs --labels");
  }
  if (config.scores.empty()) {
    throw Error(ErrorCode::kUsage, "metaeval needs at least one --scores");
  }
  const auto labels = internal::LoadLabels(config.labels_path);
  std::set<std::string> doc_set;
  std::set<std::string> sys_set;
  for (const auto& j : labels) {
    doc_set.insert(j.doc_id);
    sys_set.insert(j.system_id);
  }
  const std::vector<std::string> docs(doc_set.begin(), doc_set.end());
  const std::vector<std::string> systems(sys_set.begin(), sys_set.end());

  std::vector<MetaEvalRow> rows;
  std::vector<std::pair<std::string, CellKey>> missing;
  for (const auto& src : ResolveMetricSources(config.scores, log)) {
    std::ifstream in(src.path);
    if (!in) throw Error(ErrorCode::kIoError, "cannot read " + src.path.string());
    auto ingest = IngestExternalScores(in, src.name, *src.orientation,
                                       src.path.string(), &docs, &systems);
    for (const auto& cell : ingest.missing) missing.emplace_back(src.name, cell);
    auto metric_rows = MetaEvaluate(ingest.table, labels, docs, systems);
    rows.insert(rows.end(), metric_rows.begin(), metric_rows.end());
  }

  internal::WriteReport(config, "metaeval", "Meta-evaluation",
                        internal::WriteCsvString([&](std::ostream& o) {
                          WriteMetaEvalReport(o, rows);
                        }));
  internal::WriteReport(config, "errors_by_system", "Human errors by system",
                        internal::WriteCsvString([&](std::ostream& o) {
                          WriteErrorsBySystem(o, labels, systems);
                        }));
  internal::WriteReport(
      config, "missing_cells", "Missing metric cells",
      internal::WriteCsvString([&](std::ostream& o) {
        csv::WriteRow(o, {"metric", "doc_id", "system_id"});
        for (const auto& [m, cell] : missing) {
          csv::WriteRow(o, {m, cell.first, cell.second});
        }
      }));
  log << "meta-evaluated " << rows.size() / 36 << " metrics over "
      << docs.size() << " documents x " << systems.size() << " systems, "
      << missing.size() << " missing cells\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// report

inline std::vector<SummaryRecord> ReadResults(const fs::path& path) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::kUsage,
                path.string() + " not found (run score first)");
  }
  std::istringstream in(ReadFile(path));
  std::vector<SummaryRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      SummaryRecord r;
      r.doc_id = j.at("doc_id").get<std::string>();
      r.system_id = j.at("system_id").get<std::string>();
      const auto& flags = j.at("flags");
      r.score.incor_coref.flag = flags.at("incor_coref").get<int>();
      r.score.incom_coref.flag = flags.at("incom_coref").get<int>();
      r.score.incom_disco.flag = flags.at("incom_disco").get<int>();
      r.score.senti_bias = j.at("senti_bias").get<double>();
      r.score.total = j.at("total").get<double>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchemaError,
                  path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

// Detector flag counts per system from a previous score run, side by side
// with human error counts when labels are available.
inline int CmdReport(const RunConfig& config, std::ostream& log) {
  const auto records = ReadResults(config.output_dir / "results.jsonl");
  std::map<std::string, std::vector<const SummaryRecord*>> by_system;
  for (const auto& r : records) by_system[r.system_id].push_back(&r);
  internal::WriteReport(
      config, "detector_counts_by_system", "Detector counts by system",
      internal::WriteCsvString([&](std::ostream& o) {
        csv::WriteRow(o, {"system_id", "n_summaries", "incor_coref",
                          "incom_coref", "incom_disco", "mean_senti_bias",
                          "mean_exteval"});
        for (const auto& [sys, rs] : by_system) {
          int c1 = 0, c2 = 0, c3 = 0;
          double senti = 0.0, total = 0.0;
          for (const auto* r : rs) {
            c1 += r->score.incor_coref.flag;
            c2 += r->score.incom_coref.flag;
            c3 += r->score.incom_disco.flag;
            senti += r->score.senti_bias;
            total += r->score.total;
          }
          const double n = static_cast<double>(rs.size());
          csv::WriteRow(o, {sys, std::to_string(rs.size()), std::to_string(c1),
                            std::to_string(c2), std::to_string(c3),
                            csv::FormatDouble(senti / n),
                            csv::FormatDouble(total / n)});
        }
      }));
  if (!config.labels_path.empty()) {
    const auto labels = internal::LoadLabels(config.labels_path);
    std::set<std::string> sys_set;
    for (const auto& j : labels) sys_set.insert(j.system_id);
    internal::WriteReport(
        config, "errors_by_system", "Human errors by system",
        internal::WriteCsvString([&](std::ostream& o) {
          WriteErrorsBySystem(o, labels,
                              {sys_set.begin(), sys_set.end()});
        }));
  }
  log << "reported " << by_system.size() << " systems from "
      << records.size() << " summaries\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// inject

struct InjectSource {
  Document doc;
  std::optional<CorefAnnotation> coref;
  std::optional<SentimentAnnotation> senti;
};

inline std::uint64_t MixSeed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Writes a fixture dataset under config.output_dir from either the corpus
// (with its annotations) or config.synthetic_docs generated documents.
// One summary per (document, kind); systems are named after the kinds.
inline int CmdInject(const RunConfig& config, std::ostream& log) {
  CheckConfig(config, config.synthetic_docs == 0);
  std::vector<InjectSource> sources;
  if (config.synthetic_docs > 0) {
    for (std::size_t i = 0; i < config.synthetic_docs; ++i) {
      char id[32];
      std::snprintf(id, sizeof(id), "synth_%04zu", i);
      auto s = GenerateSyntheticDocument(MixSeed(config.seed, i), id);
      sources.push_back({std::move(s.doc), std::move(s.coref),
                         std::move(s.senti)});
    }
  } else {
    const DatasetPaths in = config.paths();
    for (const auto& id : ListDocIds(config.corpus_dir)) {
      InjectSource s;
      s.doc = LoadDocument(in, id);
      if (fs::exists(in.DocCoref(id))) {
        s.coref = LoadCoref(in.DocCoref(id), Scope::kDocument, s.doc.text,
                            LoadOptions{config.strict}, nullptr);
      }
      if (fs::exists(in.DocSenti(id))) {
        s.senti = LoadSentiment(in.DocSenti(id), Scope::kDocument,
                                s.doc.sentences.size());
      }
      sources.push_back(std::move(s));
    }
  }

  const fs::path root = config.output_dir;
  const DatasetPaths out = DatasetPaths::FromRoot(root);
  std::ostringstream expected;
  std::ostringstream status;
  csv::WriteRow(expected, ExpectedHeader());
  csv::WriteRow(status, {"doc_id", "kind", "status", "note"});
  std::size_t written = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto& src = sources[i];
    const std::string& id = src.doc.doc_id;
    const std::uint64_t seed = MixSeed(config.seed, i);
    WriteDocument(out, src.doc);
    const CorefAnnotation* coref = src.coref ? &*src.coref : nullptr;
    if (coref) WriteFile(out.DocCoref(id), SerializeCoref(*coref));
    if (src.senti) WriteFile(out.DocSenti(id), SerializeSentiment(*src.senti));

    std::vector<std::pair<std::string, std::function<InjectedFixture()>>> kinds;
    kinds.emplace_back("incom_coref", [&] {
      if (!coref) {
        throw Error(ErrorCode::kNoCandidate, id + ": no coreference annotation");
      }
      return InjectIncompleteCoref(src.doc, *coref, seed, config.lexicon);
    });
    kinds.emplace_back("incom_disco", [&] {
      return InjectIncompleteDisco(src.doc, seed, coref, config.lexicon);
    });
    kinds.emplace_back("clean", [&] {
      return InjectClean(src.doc, config.lead_k, coref, config.lexicon);
    });
    for (const auto& [kind, make] : kinds) {
      InjectedFixture f;
      try {
        f = make();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoCandidate &&
            e.code() != ErrorCode::kTooShort) {
          throw;
        }
        csv::WriteRow(status, {id, kind, ErrorCodeName(e.code()), e.what()});
        continue;
      }
      const std::string sys = kind;
      WriteFile(out.Summary(sys, id), SerializeSummaryUnits(f.summary));
      WriteFile(out.SummaryCoref(sys, id), SerializeCoref(f.summary_coref));
      if (src.senti) {
        // EDU units take the score of their sentence.
        SentimentAnnotation summ;
        summ.scope = Scope::kSummary;
        summ.provider = "sentence-inherited";
        for (const auto& u : f.summary.units()) {
          summ.scores.push_back(src.senti->scores.at(u.doc_sentence_index));
        }
        WriteFile(out.SummarySenti(sys, id), SerializeSentiment(summ));
      }
      csv::WriteRow(expected,
                    {id, sys, internal::OptionalFlag(f.expected_incom_coref),
                     internal::OptionalFlag(f.expected_incom_disco),
                     std::to_string(f.seed), f.construction_note});
      csv::WriteRow(status, {id, kind, "ok", f.construction_note});
      ++written;
    }
  }
  WriteFile(root / "expected.csv", expected.str());
  WriteFile(root / "inject_report.csv", status.str());
  log << "wrote " << written << " fixtures for " << sources.size()
      << " documents to " << root.string() << "\n";
  return kExitOk;
}

}  // namespace exteval

#endif  // EXTEVAL_PIPELINE_H_
