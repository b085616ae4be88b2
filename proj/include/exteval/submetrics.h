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

// The rule-based faithfulness sub-metrics for extractive summaries and
// their sum, ExtEval.
//
//   IncorCorefEval  two mentions share a summary cluster but their document
//                   counterparts sit in different document clusters.
//   IncomCorefEval  a summary cluster opens with a pronoun or determiner +
//                   noun phrase that is not the first mention of its
//                   document cluster.
//   IncomDiscoEval  a sentence opening with a linking term lacks its
//                   neighbouring sentence, or an EDU lacks its predecessor
//                   in the same sentence.
//   SentiBias       |mean summary sentiment - mean document sentiment|.
//
// ExtEval = IncorCorefEval + IncomCorefEval + IncomDiscoEval + SentiBias,
// with the first three reported as 0/1 flags.

#ifndef EXTEVAL_SUBMETRICS_H_
#define EXTEVAL_SUBMETRICS_H_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "exteval/annotations.h"
#include "exteval/common.h"
#include "exteval/corpus.h"
#include "exteval/lexicon.h"

namespace exteval {

struct Evidence {
  Span summary_span;
  Span doc_span;
  std::string rule;
  std::string note;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct SubMetricResult {
  int flag = 0;
  int raw_count = 0;
  std::vector<Evidence> evidence;
};

struct ExtEvalScore {
  SubMetricResult incor_coref;
  SubMetricResult incom_coref;
  SubMetricResult incom_disco;
  double senti_bias = 0.0;
  double total = 0.0;
};

namespace internal {

inline void Finish(SubMetricResult& result) {
  std::sort(result.evidence.begin(), result.evidence.end(),
            [](const Evidence& a, const Evidence& b) {
              return std::tie(a.summary_span, a.doc_span, a.rule, a.note) <
                     std::tie(b.summary_span, b.doc_span, b.rule, b.note);
            });
  result.raw_count = static_cast<int>(result.evidence.size());
  result.flag = result.raw_count > 0 ? 1 : 0;
}

// Projected mentions grouped by summary cluster, each group in summary
// order.
inline std::map<int, std::vector<const ProjectedMention*>> GroupBySummaryCluster(
    const std::vector<ProjectedMention>& projected) {
  std::map<int, std::vector<const ProjectedMention*>> groups;
  for (const auto& pm : projected) {
    groups[pm.summary_mention.cluster_id].push_back(&pm);
  }
  for (auto& [id, ms] : groups) {
    std::sort(ms.begin(), ms.end(), [](const auto* a, const auto* b) {
      return a->summary_mention.span < b->summary_mention.span;
    });
  }
  return groups;
}

}  // namespace internal

inline SubMetricResult IncorCorefEval(
    const std::vector<ProjectedMention>& projected) {
  SubMetricResult result;
  for (const auto& [id, ms] : internal::GroupBySummaryCluster(projected)) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (!ms[i]->doc_cluster_id) continue;
      for (std::size_t k = i + 1; k < ms.size(); ++k) {
        if (!ms[k]->doc_cluster_id) continue;
        if (*ms[i]->doc_cluster_id == *ms[k]->doc_cluster_id) continue;
        const auto& first = ms[i]->summary_mention;
        const auto& second = ms[k]->summary_mention;
        result.evidence.push_back(Evidence{
            second.span, ms[k]->doc_span, "incor_coref",
            internal::Quoted(second.text) + " resolves with " +
                internal::Quoted(first.text) + " " + ToString(first.span) +
                " in the summary but not in the document"});
      }
    }
  }
  internal::Finish(result);
  return result;
}

inline SubMetricResult IncomCorefEval(
    const CorefAnnotation& doc_coref, const CorefAnnotation& summary_coref,
    const std::vector<ProjectedMention>& projected,
    const Lexicon& lexicon = {}) {
  std::map<Span, const ProjectedMention*> by_span;
  for (const auto& pm : projected) by_span[pm.summary_mention.span] = &pm;

  SubMetricResult result;
  for (const auto& [id, mentions] : summary_coref.clusters) {
    if (mentions.empty()) continue;
    const Mention& first = mentions.front();
    const MentionClass cls = ClassifyMention(first.text, lexicon);
    if (cls == MentionClass::kOther) continue;
    auto it = by_span.find(first.span);
    if (it == by_span.end() || !it->second->doc_cluster_id) continue;
    const auto& doc_cluster = doc_coref.clusters.at(*it->second->doc_cluster_id);
    const Mention& doc_first = doc_cluster.front();
    if (doc_first.span == it->second->doc_span) continue;
    result.evidence.push_back(Evidence{
        first.span, it->second->doc_span,
        std::string("incom_coref:") + MentionClassName(cls),
        internal::Quoted(first.text) + " opens its summary cluster; its "
            "document antecedent " + internal::Quoted(doc_first.text) + " " +
            ToString(doc_first.span) + " is not in the summary"});
  }
  internal::Finish(result);
  return result;
}

inline SubMetricResult IncomDiscoEval(const AlignedSummary& aligned,
                                      const Document& doc,
                                      const Lexicon& lexicon = {}) {
  SubMetricResult result;
  const auto& units = aligned.units();
  const std::size_t n_sentences = doc.sentences.size();
  for (std::size_t i = 0; i < units.size(); ++i) {
    const SummaryUnit& u = units[i];
    auto need = DetectLinkingTerm(u, lexicon);
    if (!need) continue;
    const std::size_t k = u.doc_sentence_index;
    switch (need->required_context) {
      case ContextRequirement::kPrevSentence: {
        if (k == 0) break;
        if (i > 0 && units[i - 1].doc_sentence_index == k - 1) break;
        result.evidence.push_back(Evidence{
            u.summary_span, u.doc_span, "incom_disco:" + need->term,
            "sentence " + std::to_string(k) + " opens with \"" + need->term +
                "\" but sentence " + std::to_string(k - 1) +
                " does not precede it in the summary"});
        break;
      }
      case ContextRequirement::kNextSentence: {
        if (k + 1 >= n_sentences) break;
        if (i + 1 < units.size() && units[i + 1].doc_sentence_index == k + 1) {
          break;
        }
        result.evidence.push_back(Evidence{
            u.summary_span, u.doc_span, "incom_disco:" + need->term,
            "sentence " + std::to_string(k) + " opens with \"" + need->term +
                "\" but sentence " + std::to_string(k + 1) +
                " does not follow it in the summary"});
        break;
      }
      case ContextRequirement::kPrevEdu: {
        const std::size_t p = *u.edu_position;
        const Span pred = doc.sentences[k].edus[p - 1].span;
        const bool present =
            std::any_of(units.begin(), units.end(), [&](const SummaryUnit& o) {
              return o.doc_span.Contains(pred);
            });
        if (present) break;
        result.evidence.push_back(Evidence{
            u.summary_span, u.doc_span, "incom_disco:edu",
            "discourse unit " + std::to_string(p) + " of sentence " +
                std::to_string(k) + " lacks unit " + std::to_string(p - 1)});
        break;
      }
    }
  }
  internal::Finish(result);
  return result;
}

inline double SentiBias(const SentimentAnnotation& doc_senti,
                        const SentimentAnnotation& summary_senti) {
  if (summary_senti.scores.empty()) {
    throw Error(ErrorCode::kEmptySummary, "no summary sentiment scores");
  }
  if (doc_senti.scores.empty()) {
    throw Error(ErrorCode::kMissingScores, "no document sentiment scores");
  }
  auto mean = [](const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };
  return std::abs(mean(summary_senti.scores) - mean(doc_senti.scores));
}

struct ExtEvalOptions {
  Lexicon lexicon;
  // When false SentiBias is not computed and contributes 0.
  bool use_sentiment = true;
};

// Everything ExtEval needs about one summary. `summary_senti` may be null,
// in which case full-sentence units inherit document sentence scores.
struct SummaryAnnotations {
  const CorefAnnotation* doc_coref = nullptr;
  const CorefAnnotation* summary_coref = nullptr;
  const SentimentAnnotation* doc_senti = nullptr;
  const SentimentAnnotation* summary_senti = nullptr;
};

inline ExtEvalScore ExtEval(const Document& doc, const AlignedSummary& aligned,
                            const SummaryAnnotations& ann,
                            const ExtEvalOptions& options = {},
                            Diagnostics* diagnostics = nullptr) {
  if (!ann.doc_coref || !ann.summary_coref) {
    throw Error(ErrorCode::kMissingDoc,
                doc.doc_id + "/" + aligned.summary().system_id +
                    ": coreference annotations are required");
  }
  ExtEvalScore score;
  const auto projected = ProjectSummaryCoref(aligned, *ann.summary_coref,
                                             *ann.doc_coref, diagnostics);
  score.incor_coref = IncorCorefEval(projected);
  score.incom_coref = IncomCorefEval(*ann.doc_coref, *ann.summary_coref,
                                     projected, options.lexicon);
  score.incom_disco = IncomDiscoEval(aligned, doc, options.lexicon);
  if (options.use_sentiment) {
    if (!ann.doc_senti) {
      throw Error(ErrorCode::kMissingScores,
                  doc.doc_id + ": document sentiment scores are required");
    }
    if (ann.summary_senti) {
      if (ann.summary_senti->scores.size() != aligned.units().size()) {
        throw Error(ErrorCode::kMissingScores,
                    doc.doc_id + "/" + aligned.summary().system_id +
                        ": one summary sentiment score per unit required");
      }
      score.senti_bias = SentiBias(*ann.doc_senti, *ann.summary_senti);
    } else {
      score.senti_bias =
          SentiBias(*ann.doc_senti, InheritSummarySentiment(*ann.doc_senti, aligned));
    }
  }
  score.total = score.incor_coref.flag + score.incom_coref.flag +
                score.incom_disco.flag + score.senti_bias;
  return score;
}

inline nlohmann::json EvidenceToJson(const std::string& submetric,
                                     const Evidence& e) {
  return {{"submetric", submetric},
          {"rule", e.rule},
          {"summary_span", {e.summary_span.start, e.summary_span.end}},
          {"doc_span", {e.doc_span.start, e.doc_span.end}},
          {"note", e.note}};
}

// Per-summary result record.
inline nlohmann::json ScoreToJson(const std::string& doc_id,
                                  const std::string& system_id,
                                  const ExtEvalScore& s) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& e : s.incor_coref.evidence) {
    evidence.push_back(EvidenceToJson("incor_coref", e));
  }
  for (const auto& e : s.incom_coref.evidence) {
    evidence.push_back(EvidenceToJson("incom_coref", e));
  }
  for (const auto& e : s.incom_disco.evidence) {
    evidence.push_back(EvidenceToJson("incom_disco", e));
  }
  return {{"doc_id", doc_id},
          {"system_id", system_id},
          {"flags",
           {{"incor_coref", s.incor_coref.flag},
            {"incom_coref", s.incom_coref.flag},
            {"incom_disco", s.incom_disco.flag}}},
          {"raw_counts",
           {{"incor_coref", s.incor_coref.raw_count},
            {"incom_coref", s.incom_coref.raw_count},
            {"incom_disco", s.incom_disco.raw_count}}},
          {"senti_bias", s.senti_bias},
          {"total", s.total},
          {"evidence", std::move(evidence)}};
}

}  // namespace exteval

#endif  // EXTEVAL_SUBMETRICS_H_
