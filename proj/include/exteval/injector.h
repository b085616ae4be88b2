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

// Builds extractive summaries whose incomplete-coreference and
// incomplete-discourse labels are known by construction. These fixtures
// are a ground-truth oracle for the detectors.
//
// Incorrect coreference is deliberately not generated: restricting document
// clusters to the summary can never produce a cluster conflict, and a real
// conflict needs a resolver run on the summary.

#ifndef EXTEVAL_INJECTOR_H_
#define EXTEVAL_INJECTOR_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "exteval/annotations.h"
#include "exteval/corpus.h"
#include "exteval/lexicon.h"

namespace exteval {

struct InjectedFixture {
  std::string kind;  // "incom_coref", "incom_disco" or "clean"
  AlignedSummary summary;
  // Document clusters restricted to the summary; empty without doc coref.
  CorefAnnotation summary_coref;
  // Unset when the construction does not pin that flag.
  std::optional<int> expected_incom_coref;
  std::optional<int> expected_incom_disco;
  std::string construction_note;
  std::uint64_t seed = 0;
};

namespace internal {

inline std::vector<std::size_t> PickDistractors(
    std::mt19937_64& rng, std::vector<std::size_t> eligible,
    std::size_t max_count) {
  const std::size_t count = std::min<std::size_t>(
      eligible.size(), static_cast<std::size_t>(rng() % (max_count + 1)));
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = rng() % eligible.size();
    picked.push_back(eligible[at]);
    eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return picked;
}

inline InjectedFixture FinishFixture(std::string kind, const Document& doc,
                                     std::vector<RawUnit> units,
                                     const CorefAnnotation* doc_coref,
                                     std::uint64_t seed,
                                     const std::string& system_id) {
  InjectedFixture f;
  f.kind = std::move(kind);
  f.seed = seed;
  f.summary = AlignSummaryToDocument(units, doc, system_id);
  if (doc_coref) f.summary_coref = RestrictCorefToSummary(*doc_coref, f.summary);
  f.summary_coref.scope = Scope::kSummary;
  return f;
}

}  // namespace internal

inline constexpr std::size_t kMaxDistractors = 2;

// Summary = a sentence whose earliest mention of some cluster is a pronoun
// or determiner phrase that is not the cluster's first document mention,
// plus distractor sentences that add no earlier mention of that cluster.
inline InjectedFixture InjectIncompleteCoref(const Document& doc,
                                             const CorefAnnotation& doc_coref,
                                             std::uint64_t seed,
                                             const Lexicon& lexicon = {}) {
  struct Candidate {
    int cluster;
    std::size_t sentence;
    const Mention* mention;
  };
  std::vector<Candidate> candidates;
  for (const auto& [id, mentions] : doc_coref.clusters) {
    std::set<std::size_t> seen_sentences;
    for (const auto& m : mentions) {
      auto s = doc.SentenceContaining(m.span);
      if (!s || !seen_sentences.insert(*s).second) continue;
      // `m` is the earliest mention of this cluster inside sentence *s.
      if (&m == &mentions.front()) continue;
      if (ClassifyMention(m.text, lexicon) == MentionClass::kOther) continue;
      candidates.push_back({id, *s, &m});
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoCandidate,
                doc.doc_id + ": no sentence opens a cluster with an anaphor");
  }
  std::mt19937_64 rng(seed);
  const Candidate& pick = candidates[rng() % candidates.size()];

  const auto& cluster = doc_coref.clusters.at(pick.cluster);
  std::vector<std::size_t> eligible;
  for (const auto& s : doc.sentences) {
    if (s.index == pick.sentence) continue;
    if (s.index < pick.sentence) {
      const bool has_mention =
          std::any_of(cluster.begin(), cluster.end(), [&](const Mention& m) {
            return s.span.Contains(m.span);
          });
      if (has_mention) continue;
    }
    eligible.push_back(s.index);
  }
  auto distractors = internal::PickDistractors(rng, eligible, kMaxDistractors);

  std::vector<RawUnit> units = {RawUnit::AtSentence(pick.sentence)};
  for (std::size_t d : distractors) units.push_back(RawUnit::AtSentence(d));
  auto f = internal::FinishFixture("incom_coref", doc, units, &doc_coref, seed,
                                   "incom_coref");
  f.expected_incom_coref = 1;
  f.construction_note =
      "sentence " + std::to_string(pick.sentence) + " opens its cluster with " +
      internal::Quoted(pick.mention->text) + "; antecedent " +
      internal::Quoted(cluster.front().text) + " excluded; " +
      std::to_string(distractors.size()) + " distractor(s)";
  return f;
}

// Explicit form: `target` needs preceding context (a linking-term sentence
// or a non-initial EDU) and `extra` sentences are added as distractors.
// Refuses, with kNoCandidate, a selection that includes the required
// predecessor.
inline InjectedFixture InjectIncompleteDiscoAt(
    const Document& doc, const RawUnit& target,
    const std::vector<std::size_t>& extra, std::uint64_t seed = 0,
    const CorefAnnotation* doc_coref = nullptr, const Lexicon& lexicon = {}) {
  std::vector<RawUnit> units = {target};
  for (std::size_t d : extra) units.push_back(RawUnit::AtSentence(d));
  auto f = internal::FinishFixture("incom_disco", doc, units, doc_coref, seed,
                                   "incom_disco");
  const std::size_t k = *target.sentence;
  const auto& aligned_units = f.summary.units();
  std::string note;
  if (target.edu) {
    const std::size_t p = *target.edu;
    if (p == 0) {
      throw Error(ErrorCode::kNoCandidate,
                  doc.doc_id + ": the first EDU of a sentence needs no context");
    }
    const Span pred = doc.sentences[k].edus[p - 1].span;
    for (const auto& u : aligned_units) {
      if (u.doc_span.Contains(pred)) {
        throw Error(ErrorCode::kNoCandidate,
                    doc.doc_id + ": selection contains the predecessor EDU");
      }
    }
    note = "EDU " + std::to_string(p) + " of sentence " + std::to_string(k) +
           " without EDU " + std::to_string(p - 1);
  } else {
    SummaryUnit probe;
    probe.kind = UnitKind::kSentence;
    probe.text = doc.sentences[k].text;
    auto need = DetectLinkingTerm(probe, lexicon);
    if (k == 0 || !need ||
        need->required_context != ContextRequirement::kPrevSentence) {
      throw Error(ErrorCode::kNoCandidate,
                  doc.doc_id + ": sentence " + std::to_string(k) +
                      " does not need a preceding sentence");
    }
    for (const auto& u : aligned_units) {
      if (u.doc_sentence_index == k - 1) {
        throw Error(ErrorCode::kNoCandidate,
                    doc.doc_id + ": selection contains sentence " +
                        std::to_string(k - 1));
      }
    }
    note = "sentence " + std::to_string(k) + " opens with \"" + need->term +
           "\" without sentence " + std::to_string(k - 1);
  }
  f.expected_incom_disco = 1;
  f.construction_note =
      note + "; " + std::to_string(extra.size()) + " distractor(s)";
  return f;
}

inline InjectedFixture InjectIncompleteDisco(
    const Document& doc, std::uint64_t seed,
    const CorefAnnotation* doc_coref = nullptr, const Lexicon& lexicon = {}) {
  std::vector<RawUnit> candidates;
  for (const auto& s : doc.sentences) {
    if (s.index == 0) continue;
    SummaryUnit probe;
    probe.kind = UnitKind::kSentence;
    probe.text = s.text;
    auto need = DetectLinkingTerm(probe, lexicon);
    if (need && need->required_context == ContextRequirement::kPrevSentence) {
      candidates.push_back(RawUnit::AtSentence(s.index));
    }
  }
  for (const auto& s : doc.sentences) {
    for (std::size_t p = 1; p < s.edus.size(); ++p) {
      candidates.push_back(RawUnit::AtEdu(s.index, p));
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoCandidate,
                doc.doc_id + ": no linking-term sentence or non-initial EDU");
  }
  std::mt19937_64 rng(seed);
  const RawUnit target = candidates[rng() % candidates.size()];
  const std::size_t k = *target.sentence;
  std::vector<std::size_t> eligible;
  for (const auto& s : doc.sentences) {
    if (s.index == k) continue;
    // A full-sentence unit k-1 is the required context for sentence units;
    // it is harmless for EDU targets but kept out for uniformity.
    if (s.index + 1 == k) continue;
    eligible.push_back(s.index);
  }
  auto extra = internal::PickDistractors(rng, eligible, kMaxDistractors);
  return InjectIncompleteDiscoAt(doc, target, extra, seed, doc_coref, lexicon);
}

// Lead-k summary: no discourse predecessor can be missing and every cluster
// that reaches the prefix starts inside it.
inline InjectedFixture InjectClean(const Document& doc, std::size_t k,
                                   const CorefAnnotation* doc_coref = nullptr,
                                   const Lexicon& lexicon = {}) {
  if (k == 0 || k > doc.sentences.size()) {
    throw Error(ErrorCode::kTooShort,
                doc.doc_id + ": cannot take " + std::to_string(k) +
                    " leading sentences from " +
                    std::to_string(doc.sentences.size()));
  }
  std::vector<RawUnit> units;
  for (std::size_t i = 0; i < k; ++i) units.push_back(RawUnit::AtSentence(i));
  auto f = internal::FinishFixture("clean", doc, units, doc_coref, 0,
                                   "lead" + std::to_string(k));
  f.construction_note = "first " + std::to_string(k) + " sentences";

  // A forward-looking connective on the last kept sentence would need the
  // sentence after the prefix.
  SummaryUnit last;
  last.kind = UnitKind::kSentence;
  last.text = doc.sentences[k - 1].text;
  auto need = DetectLinkingTerm(last, lexicon);
  if (need && need->required_context == ContextRequirement::kNextSentence &&
      k < doc.sentences.size()) {
    f.construction_note += "; last sentence needs its successor";
  } else {
    f.expected_incom_disco = 0;
  }

  if (doc_coref) {
    // A cluster whose first mention crosses a sentence boundary loses it in
    // the summary, so its next mention would open the summary cluster.
    bool sound = true;
    for (const auto& [id, ms] : doc_coref->clusters) {
      const Mention& first = ms.front();
      if (first.span.start >= doc.sentences[k - 1].span.end) continue;
      if (!f.summary.MapDocumentSpan(first.span)) sound = false;
    }
    if (sound) {
      f.expected_incom_coref = 0;
    } else {
      f.construction_note += "; a first mention crosses sentences";
    }
  }
  return f;
}

}  // namespace exteval

#endif  // EXTEVAL_INJECTOR_H_
