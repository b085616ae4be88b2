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

// Coreference and sentiment annotations, human error labels, and projection
// of summary-scope mentions into document coordinates.

#ifndef EXTEVAL_ANNOTATIONS_H_
#define EXTEVAL_ANNOTATIONS_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "exteval/common.h"
#include "exteval/corpus.h"
#include "exteval/csv.h"

namespace exteval {

enum class Scope { kDocument, kSummary };

inline const char* ScopeName(Scope scope) {
  return scope == Scope::kDocument ? "document" : "summary";
}

struct Mention {
  Scope scope = Scope::kDocument;
  Span span;
  std::u32string text;
  int cluster_id = 0;
};

struct CorefAnnotation {
  Scope scope = Scope::kDocument;
  // Mentions in each cluster are ordered by (start, end).
  std::map<int, std::vector<Mention>> clusters;

  std::size_t MentionCount() const {
    std::size_t n = 0;
    for (const auto& [id, ms] : clusters) n += ms.size();
    return n;
  }

  // Cluster containing a mention with exactly this span.
  std::optional<int> ClusterOf(const Span& span) const {
    for (const auto& [id, ms] : clusters) {
      for (const auto& m : ms) {
        if (m.span == span) return id;
      }
    }
    return std::nullopt;
  }
};

struct SentimentAnnotation {
  Scope scope = Scope::kDocument;
  // One score per document sentence or summary unit, 1 = most positive.
  std::vector<double> scores;
  std::string provider;
};

struct LoadOptions {
  bool strict = false;
};

// Builds a coreference annotation from clusters of spans over `scope_text`,
// checking each mention's text against the scope text. Mentions that fail
// are dropped with a diagnostic, or throw under strict mode.
inline CorefAnnotation MakeCoref(
    Scope scope, const std::u32string& scope_text,
    const std::vector<std::vector<std::pair<Span, std::u32string>>>& clusters,
    const std::string& where, const LoadOptions& options = {},
    Diagnostics* diagnostics = nullptr) {
  auto problem = [&](ErrorCode code, const std::string& msg) {
    if (options.strict) throw Error(code, where + ": " + msg);
    if (diagnostics) diagnostics->push_back(Diagnostic{code, where, msg});
  };
  CorefAnnotation out;
  out.scope = scope;
  std::set<Span> seen;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    std::vector<Mention> mentions;
    for (const auto& [span, mention_text] : clusters[c]) {
      const std::string desc =
          "cluster " + std::to_string(c) + " mention " + ToString(span);
      if (span.start > span.end || span.end > scope_text.size()) {
        problem(ErrorCode::kSpanMismatch, desc + " outside the " +
                                              ScopeName(scope) + " text");
        continue;
      }
      const std::u32string actual =
          scope_text.substr(span.start, span.size());
      if (actual != mention_text) {
        problem(ErrorCode::kSpanMismatch,
                desc + " text \"" + utf8::Encode(mention_text) +
                    "\" != source \"" + utf8::Encode(actual) + "\"");
        continue;
      }
      if (!seen.insert(span).second) {
        problem(ErrorCode::kSchemaError,
                desc + " repeats a span already in a cluster");
        continue;
      }
      mentions.push_back(Mention{scope, span, mention_text, static_cast<int>(c)});
    }
    if (mentions.empty()) continue;
    std::sort(mentions.begin(), mentions.end(),
              [](const Mention& a, const Mention& b) { return a.span < b.span; });
    out.clusters.emplace(static_cast<int>(c), std::move(mentions));
  }
  return out;
}

// Parses the interchange form {scope, clusters: [[{start, end, text}]]}.
inline CorefAnnotation ParseCoref(const nlohmann::json& j, Scope expected_scope,
                                  const std::u32string& scope_text,
                                  const std::string& where,
                                  const LoadOptions& options = {},
                                  Diagnostics* diagnostics = nullptr) {
  if (!j.is_object() || !j.contains("clusters") || !j["clusters"].is_array()) {
    throw Error(ErrorCode::kSchemaError, where + ": expected {clusters: [...]}");
  }
  if (j.contains("scope")) {
    if (!j["scope"].is_string() ||
        j["scope"].get<std::string>() != ScopeName(expected_scope)) {
      throw Error(ErrorCode::kSchemaError,
                  where + ": scope must be \"" +
                      std::string(ScopeName(expected_scope)) + "\"");
    }
  }
  std::vector<std::vector<std::pair<Span, std::u32string>>> clusters;
  for (const auto& jc : j["clusters"]) {
    if (!jc.is_array()) {
      throw Error(ErrorCode::kSchemaError, where + ": cluster is not a list");
    }
    auto& cluster = clusters.emplace_back();
    for (const auto& jm : jc) {
      if (!jm.is_object() || !jm.contains("start") || !jm.contains("end") ||
          !jm.contains("text") || !jm["start"].is_number_unsigned() ||
          !jm["end"].is_number_unsigned() || !jm["text"].is_string()) {
        throw Error(ErrorCode::kSchemaError,
                    where + ": mention must be {start, end, text} with "
                            "non-negative integer offsets");
      }
      cluster.emplace_back(Span{jm["start"].get<std::size_t>(),
                                jm["end"].get<std::size_t>()},
                           utf8::Decode(jm["text"].get<std::string>()));
    }
  }
  return MakeCoref(expected_scope, scope_text, clusters, where, options,
                   diagnostics);
}

inline nlohmann::json CorefToJson(const CorefAnnotation& coref) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& [id, mentions] : coref.clusters) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& m : mentions) {
      jc.push_back({{"start", m.span.start},
                    {"end", m.span.end},
                    {"text", utf8::Encode(m.text)}});
    }
    clusters.push_back(std::move(jc));
  }
  return {{"scope", ScopeName(coref.scope)}, {"clusters", std::move(clusters)}};
}

// Canonical text: sorted keys, compact, trailing newline.
inline std::string SerializeCoref(const CorefAnnotation& coref) {
  return CorefToJson(coref).dump() + "\n";
}

inline SentimentAnnotation ParseSentiment(const nlohmann::json& j, Scope scope,
                                          std::size_t expected_count,
                                          const std::string& where) {
  if (!j.is_object() || !j.contains("scores") || !j["scores"].is_array()) {
    throw Error(ErrorCode::kSchemaError, where + ": expected {scores: [...]}");
  }
  SentimentAnnotation out;
  out.scope = scope;
  if (j.contains("provider")) {
    if (!j["provider"].is_string()) {
      throw Error(ErrorCode::kSchemaError, where + ": provider must be a string");
    }
    out.provider = j["provider"].get<std::string>();
  }
  for (const auto& js : j["scores"]) {
    if (!js.is_number()) {
      throw Error(ErrorCode::kSchemaError, where + ": non-numeric score");
    }
    const double v = js.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kSchemaError,
                  where + ": score " + csv::FormatDouble(v) + " outside [0,1]");
    }
    out.scores.push_back(v);
  }
  if (out.scores.size() != expected_count) {
    throw Error(ErrorCode::kMissingScores,
                where + ": " + std::to_string(out.scores.size()) +
                    " scores for " + std::to_string(expected_count) +
                    (scope == Scope::kDocument ? " sentences" : " units"));
  }
  return out;
}

inline std::string SerializeSentiment(const SentimentAnnotation& senti) {
  nlohmann::json j = {{"scores", senti.scores}};
  if (!senti.provider.empty()) j["provider"] = senti.provider;
  return j.dump() + "\n";
}

// Summary-scope sentiment inherited from document sentence scores. Only
// full-sentence units can inherit; EDU units need their own scores.
inline SentimentAnnotation InheritSummarySentiment(
    const SentimentAnnotation& doc_senti, const AlignedSummary& aligned) {
  SentimentAnnotation out;
  out.scope = Scope::kSummary;
  out.provider = doc_senti.provider;
  for (const auto& u : aligned.units()) {
    if (u.kind != UnitKind::kSentence) {
      throw Error(ErrorCode::kMissingScores,
                  aligned.summary().doc_id + "/" +
                      aligned.summary().system_id +
                      ": EDU units need summary-scope sentiment scores");
    }
    if (u.doc_sentence_index >= doc_senti.scores.size()) {
      throw Error(ErrorCode::kMissingScores,
                  aligned.summary().doc_id + ": no score for sentence " +
                      std::to_string(u.doc_sentence_index));
    }
    out.scores.push_back(doc_senti.scores[u.doc_sentence_index]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projection of summary mentions into the document.

struct ProjectedMention {
  Mention summary_mention;
  Span doc_span;
  std::optional<int> doc_cluster_id;
};

// Maps every summary mention to its document span and looks up the document
// mention with the identical span. Mentions that cross a unit boundary
// cannot come from faithful extraction and are dropped with a diagnostic.
inline std::vector<ProjectedMention> ProjectSummaryCoref(
    const AlignedSummary& aligned, const CorefAnnotation& summary_coref,
    const CorefAnnotation& doc_coref, Diagnostics* diagnostics = nullptr) {
  std::map<Span, int> doc_index;
  for (const auto& [id, ms] : doc_coref.clusters) {
    for (const auto& m : ms) doc_index.emplace(m.span, id);
  }
  std::vector<ProjectedMention> out;
  const std::string where =
      aligned.summary().doc_id + "/" + aligned.summary().system_id;
  for (const auto& [id, ms] : summary_coref.clusters) {
    for (const auto& m : ms) {
      Span doc_span;
      try {
        doc_span = MapSummarySpan(aligned, m.span);
      } catch (const Error& e) {
        if (diagnostics) {
          diagnostics->push_back(Diagnostic{
              e.code(), where,
              "dropping summary mention \"" + utf8::Encode(m.text) + "\" " +
                  ToString(m.span)});
        }
        continue;
      }
      ProjectedMention pm{m, doc_span, std::nullopt};
      if (auto it = doc_index.find(doc_span); it != doc_index.end()) {
        pm.doc_cluster_id = it->second;
      }
      out.push_back(std::move(pm));
    }
  }
  return out;
}

// Restricts document clusters to the mentions inside extracted units and
// re-expresses them in summary coordinates. This is the summary-scope
// annotation an ideal resolver would produce when it agrees with the
// document-scope resolver.
inline CorefAnnotation RestrictCorefToSummary(const CorefAnnotation& doc_coref,
                                              const AlignedSummary& aligned) {
  CorefAnnotation out;
  out.scope = Scope::kSummary;
  for (const auto& [id, ms] : doc_coref.clusters) {
    std::vector<Mention> kept;
    for (const auto& m : ms) {
      if (auto span = aligned.MapDocumentSpan(m.span)) {
        kept.push_back(Mention{Scope::kSummary, *span, m.text, id});
      }
    }
    if (!kept.empty()) out.clusters.emplace(id, std::move(kept));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Human labels.

enum class ErrorType {
  kIncorrectCoref = 0,
  kIncompleteCoref = 1,
  kIncorrectDiscourse = 2,
  kIncompleteDiscourse = 3,
  kMisleading = 4,
};

inline constexpr std::array<ErrorType, 5> kAllErrorTypes = {
    ErrorType::kIncorrectCoref, ErrorType::kIncompleteCoref,
    ErrorType::kIncorrectDiscourse, ErrorType::kIncompleteDiscourse,
    ErrorType::kMisleading};

inline const char* ErrorTypeName(ErrorType t) {
  switch (t) {
    case ErrorType::kIncorrectCoref: return "incorrect_coref";
    case ErrorType::kIncompleteCoref: return "incomplete_coref";
    case ErrorType::kIncorrectDiscourse: return "incorrect_discourse";
    case ErrorType::kIncompleteDiscourse: return "incomplete_discourse";
    case ErrorType::kMisleading: return "misleading";
  }
  return "";
}

inline std::optional<ErrorType> ParseErrorType(std::string_view name) {
  for (ErrorType t : kAllErrorTypes) {
    if (name == ErrorTypeName(t)) return t;
  }
  return std::nullopt;
}

// Annotation priority: incorrect errors outrank incomplete ones, which
// outrank misleading information. Lower value = higher priority.
inline int ErrorPriority(ErrorType t) {
  switch (t) {
    case ErrorType::kIncorrectCoref:
    case ErrorType::kIncorrectDiscourse:
      return 0;
    case ErrorType::kIncompleteCoref:
    case ErrorType::kIncompleteDiscourse:
      return 1;
    case ErrorType::kMisleading:
      return 2;
  }
  return 3;
}

struct HumanJudgment {
  std::string doc_id;
  std::string system_id;
  std::array<int, 5> labels{};  // indexed by ErrorType
  int overall = 0;

  int label(ErrorType t) const { return labels[static_cast<int>(t)]; }
  void set_label(ErrorType t, int v) { labels[static_cast<int>(t)] = v; }
};

inline int OverallFromLabels(const HumanJudgment& j) {
  int sum = 0;
  for (int v : j.labels) sum += v;
  return sum;
}

// One annotator-reported issue, possibly tagged with several types in the
// order the annotator assigned them.
struct RawIssue {
  std::vector<ErrorType> types;
  std::string location;
};

// The single type an issue counts under: the highest-priority tag, and the
// first-assigned one among equal-priority tags.
inline std::optional<ErrorType> ResolveIssueType(const RawIssue& issue) {
  std::optional<ErrorType> best;
  for (ErrorType t : issue.types) {
    if (!best || ErrorPriority(t) < ErrorPriority(*best)) best = t;
  }
  return best;
}

inline HumanJudgment ResolveHumanLabelConflicts(
    std::string doc_id, std::string system_id,
    const std::vector<RawIssue>& issues) {
  HumanJudgment j;
  j.doc_id = std::move(doc_id);
  j.system_id = std::move(system_id);
  for (const auto& issue : issues) {
    if (auto t = ResolveIssueType(issue)) j.set_label(*t, 1);
  }
  j.overall = OverallFromLabels(j);
  return j;
}

inline const std::vector<std::string>& HumanLabelHeader() {
  static const std::vector<std::string> header = {
      "doc_id",          "system_id",           "incorrect_coref",
      "incomplete_coref", "incorrect_discourse", "incomplete_discourse",
      "misleading",      "overall"};
  return header;
}

// Reads labels/human.csv. Rows are returned in file order.
inline std::vector<HumanJudgment> ReadHumanLabels(std::istream& in,
                                                  const std::string& where) {
  auto rows = csv::Read(in);
  if (rows.empty() || rows[0] != HumanLabelHeader()) {
    throw Error(ErrorCode::kSchemaError,
                where + ": header must be doc_id,system_id,incorrect_coref,"
                        "incomplete_coref,incorrect_discourse,"
                        "incomplete_discourse,misleading,overall");
  }
  std::vector<HumanJudgment> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string line = where + ":" + std::to_string(r + 1);
    if (row.size() != 8) {
      throw Error(ErrorCode::kSchemaError, line + ": expected 8 columns");
    }
    HumanJudgment j;
    j.doc_id = row[0];
    j.system_id = row[1];
    if (!seen.emplace(j.doc_id, j.system_id).second) {
      throw Error(ErrorCode::kDuplicateCell,
                  line + ": duplicate row for " + j.doc_id + "/" + j.system_id);
    }
    for (int k = 0; k < 5; ++k) {
      if (row[2 + k] != "0" && row[2 + k] != "1") {
        throw Error(ErrorCode::kSchemaError,
                    line + ": " + HumanLabelHeader()[2 + k] + " must be 0 or 1");
      }
      j.labels[k] = row[2 + k] == "1" ? 1 : 0;
    }
    auto overall = csv::ParseDouble(row[7]);
    if (!overall || *overall != std::floor(*overall)) {
      throw Error(ErrorCode::kNonNumeric, line + ": overall must be an integer");
    }
    j.overall = static_cast<int>(*overall);
    if (j.overall != OverallFromLabels(j)) {
      throw Error(ErrorCode::kSchemaError,
                  line + ": overall " + row[7] +
                      " is not the sum of the five labels");
    }
    out.push_back(std::move(j));
  }
  return out;
}

inline void WriteHumanLabels(std::ostream& out,
                             const std::vector<HumanJudgment>& labels) {
  csv::WriteRow(out, HumanLabelHeader());
  for (const auto& j : labels) {
    csv::Row row = {j.doc_id, j.system_id};
    for (int v : j.labels) row.push_back(std::to_string(v));
    row.push_back(std::to_string(j.overall));
    csv::WriteRow(out, row);
  }
}

}  // namespace exteval

#endif  // EXTEVAL_ANNOTATIONS_H_
