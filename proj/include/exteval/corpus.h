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

// Documents, extractive summaries, and the alignment between summary units
// and document character spans.

#ifndef EXTEVAL_CORPUS_H_
#define EXTEVAL_CORPUS_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exteval/common.h"

namespace exteval {

struct EduSpan {
  std::size_t sentence_index = 0;
  std::size_t position_in_sentence = 0;
  Span span;
  std::u32string text;
};

struct Sentence {
  std::size_t index = 0;
  Span span;
  std::u32string text;
  // Empty when the document carries no discourse segmentation.
  std::vector<EduSpan> edus;
};

struct Document {
  std::string doc_id;
  std::u32string text;
  std::vector<Sentence> sentences;

  std::u32string Slice(const Span& span) const {
    return text.substr(span.start, span.size());
  }

  // Index of the sentence whose span contains `span`, if any.
  std::optional<std::size_t> SentenceContaining(const Span& span) const {
    auto it = std::upper_bound(
        sentences.begin(), sentences.end(), span.start,
        [](std::size_t pos, const Sentence& s) { return pos < s.span.start; });
    if (it == sentences.begin()) return std::nullopt;
    --it;
    if (it->span.Contains(span)) return it->index;
    return std::nullopt;
  }
};

// Segmentation input for MakeDocument: one sentence span plus optional EDU
// spans, all in document coordinates.
struct SentenceSpec {
  Span span;
  std::vector<Span> edus;
};

// Builds a document and checks the segmentation invariants. Throws
// kSchemaError on overlapping, unordered or out-of-range spans.
inline Document MakeDocument(std::string doc_id, std::u32string text,
                             const std::vector<SentenceSpec>& specs) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.text = std::move(text);
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    const std::string where =
        doc.doc_id + " sentence " + std::to_string(i) + " " +
        ToString(spec.span);
    if (spec.span.start > spec.span.end || spec.span.end > doc.text.size()) {
      throw Error(ErrorCode::kSchemaError, where + " outside document text");
    }
    if (i > 0 && spec.span.start < prev_end) {
      throw Error(ErrorCode::kSchemaError,
                  where + " overlaps or precedes the previous sentence");
    }
    prev_end = spec.span.end;
    Sentence sentence;
    sentence.index = i;
    sentence.span = spec.span;
    sentence.text = doc.Slice(spec.span);
    std::size_t edu_prev_end = spec.span.start;
    for (std::size_t k = 0; k < spec.edus.size(); ++k) {
      const Span& e = spec.edus[k];
      if (e.start > e.end || !spec.span.Contains(e)) {
        throw Error(ErrorCode::kSchemaError,
                    where + " EDU " + std::to_string(k) + " " + ToString(e) +
                        " outside its sentence");
      }
      if (e.start < edu_prev_end) {
        throw Error(ErrorCode::kSchemaError,
                    where + " EDU " + std::to_string(k) +
                        " overlaps or precedes the previous EDU");
      }
      edu_prev_end = e.end;
      sentence.edus.push_back(EduSpan{i, k, e, doc.Slice(e)});
    }
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

enum class UnitKind { kSentence, kEdu };

struct SummaryUnit {
  UnitKind kind = UnitKind::kSentence;
  std::size_t doc_sentence_index = 0;
  std::optional<std::size_t> edu_position;
  Span doc_span;
  std::u32string text;
  Span summary_span;
};

struct ExtractiveSummary {
  std::string doc_id;
  std::string system_id;
  std::vector<SummaryUnit> units;
};

// A summary unit as it appears in a system output file: literal text, a
// sentence index, or sentence + EDU coordinates. When both text and a
// sentence index are given the text must match inside that sentence.
struct RawUnit {
  std::optional<std::u32string> text;
  std::optional<std::size_t> sentence;
  std::optional<std::size_t> edu;

  static RawUnit Text(std::u32string t) { return RawUnit{std::move(t), {}, {}}; }
  static RawUnit AtSentence(std::size_t s) { return RawUnit{{}, s, {}}; }
  static RawUnit AtEdu(std::size_t s, std::size_t e) { return RawUnit{{}, s, e}; }
};

struct AlignOptions {
  bool strict = false;
  std::u32string separator = U" ";
};

class AlignedSummary {
 public:
  AlignedSummary() = default;
  AlignedSummary(ExtractiveSummary summary, std::u32string summary_text,
                 std::u32string separator)
      : summary_(std::move(summary)),
        summary_text_(std::move(summary_text)),
        separator_(std::move(separator)) {}

  const ExtractiveSummary& summary() const { return summary_; }
  const std::vector<SummaryUnit>& units() const { return summary_.units; }
  const std::u32string& summary_text() const { return summary_text_; }
  const std::u32string& separator() const { return separator_; }

  // Index of the unit whose summary span contains `span`.
  std::optional<std::size_t> UnitContaining(const Span& span) const {
    const auto& units = summary_.units;
    auto it = std::upper_bound(units.begin(), units.end(), span.start,
                               [](std::size_t pos, const SummaryUnit& u) {
                                 return pos < u.summary_span.start;
                               });
    if (it == units.begin()) return std::nullopt;
    --it;
    if (it->summary_span.Contains(span)) {
      return static_cast<std::size_t>(it - units.begin());
    }
    return std::nullopt;
  }

  // Document offset for a summary offset; nullopt on separator characters.
  std::optional<std::size_t> MapOffset(std::size_t offset) const {
    if (offset >= summary_text_.size()) return std::nullopt;
    auto unit = UnitContaining(Span{offset, offset + 1});
    if (!unit) return std::nullopt;
    const auto& u = summary_.units[*unit];
    return u.doc_span.start + (offset - u.summary_span.start);
  }

  // Summary span covering a document span, when the document span lies
  // inside one extracted unit.
  std::optional<Span> MapDocumentSpan(const Span& doc_span) const {
    for (const auto& u : summary_.units) {
      if (u.doc_span.Contains(doc_span)) {
        const std::size_t delta = doc_span.start - u.doc_span.start;
        return Span{u.summary_span.start + delta,
                    u.summary_span.start + delta + doc_span.size()};
      }
      if (u.doc_span.start > doc_span.start) break;
    }
    return std::nullopt;
  }

 private:
  ExtractiveSummary summary_;
  std::u32string summary_text_;
  std::u32string separator_;
};

namespace internal {

struct Candidate {
  UnitKind kind;
  std::size_t sentence;
  std::optional<std::size_t> edu;
};

inline SummaryUnit UnitFromCandidate(const Document& doc, const Candidate& c) {
  SummaryUnit unit;
  unit.kind = c.kind;
  unit.doc_sentence_index = c.sentence;
  const Sentence& s = doc.sentences[c.sentence];
  if (c.kind == UnitKind::kEdu) {
    unit.edu_position = c.edu;
    unit.doc_span = s.edus[*c.edu].span;
  } else {
    unit.doc_span = s.span;
  }
  unit.text = doc.Slice(unit.doc_span);
  return unit;
}

inline std::string Describe(const RawUnit& raw, std::size_t i) {
  std::string out = "unit " + std::to_string(i);
  if (raw.sentence) out += " sentence=" + std::to_string(*raw.sentence);
  if (raw.edu) out += " edu=" + std::to_string(*raw.edu);
  if (raw.text) out += " text=\"" + utf8::Encode(*raw.text) + "\"";
  return out;
}

}  // namespace internal

// Resolves each raw unit to a unique document span, sorts units into
// document order, drops duplicates and rebuilds the summary text.
//
// Text units are compared after whitespace normalization; sentences are
// preferred over EDUs and, among several matches, the earliest wins with a
// kAmbiguousMatch diagnostic (an error under strict mode).
inline AlignedSummary AlignSummaryToDocument(
    const std::vector<RawUnit>& raw_units, const Document& doc,
    std::string system_id = "", const AlignOptions& options = {},
    Diagnostics* diagnostics = nullptr) {
  if (raw_units.empty()) {
    throw Error(ErrorCode::kEmptySummary,
                doc.doc_id + "/" + system_id + ": summary has no units");
  }
  const std::string where = doc.doc_id + "/" + system_id;
  auto warn = [&](ErrorCode code, const std::string& msg) {
    if (options.strict) throw Error(code, where + ": " + msg);
    if (diagnostics) diagnostics->push_back(Diagnostic{code, where, msg});
  };

  // Normalized segment texts, computed lazily once per call.
  std::vector<std::u32string> norm_sentences;
  std::vector<std::vector<std::u32string>> norm_edus;
  auto ensure_norm = [&] {
    if (!norm_sentences.empty() || doc.sentences.empty()) return;
    for (const auto& s : doc.sentences) {
      norm_sentences.push_back(text::NormalizeWhitespace(s.text));
      auto& edus = norm_edus.emplace_back();
      for (const auto& e : s.edus) {
        edus.push_back(text::NormalizeWhitespace(e.text));
      }
    }
  };

  std::vector<SummaryUnit> units;
  for (std::size_t i = 0; i < raw_units.size(); ++i) {
    const RawUnit& raw = raw_units[i];
    const std::string desc = internal::Describe(raw, i);
    if (raw.sentence && *raw.sentence >= doc.sentences.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  where + ": " + desc + " sentence index out of range");
    }
    if (raw.edu && !raw.sentence) {
      throw Error(ErrorCode::kSchemaError,
                  where + ": " + desc + " EDU index without sentence index");
    }
    if (raw.edu && *raw.edu >= doc.sentences[*raw.sentence].edus.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  where + ": " + desc + " EDU index out of range");
    }
    if (!raw.text && !raw.sentence) {
      throw Error(ErrorCode::kSchemaError,
                  where + ": " + desc + " has neither text nor coordinates");
    }

    if (!raw.text) {
      internal::Candidate c{raw.edu ? UnitKind::kEdu : UnitKind::kSentence,
                            *raw.sentence, raw.edu};
      units.push_back(internal::UnitFromCandidate(doc, c));
      continue;
    }

    ensure_norm();
    const std::u32string needle = text::NormalizeWhitespace(*raw.text);
    std::vector<internal::Candidate> sentence_hits;
    std::vector<internal::Candidate> edu_hits;
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      if (raw.sentence && *raw.sentence != s) continue;
      if (!raw.edu && norm_sentences[s] == needle) {
        sentence_hits.push_back({UnitKind::kSentence, s, std::nullopt});
      }
      for (std::size_t e = 0; e < norm_edus[s].size(); ++e) {
        if (raw.edu && *raw.edu != e) continue;
        if (norm_edus[s][e] == needle) {
          edu_hits.push_back({UnitKind::kEdu, s, e});
        }
      }
    }
    const auto& hits = sentence_hits.empty() ? edu_hits : sentence_hits;
    if (hits.empty()) {
      throw Error(ErrorCode::kNotExtractive,
                  where + ": " + desc +
                      " matches no document sentence or discourse unit");
    }
    if (hits.size() > 1) {
      warn(ErrorCode::kAmbiguousMatch,
           desc + " matches " + std::to_string(hits.size()) +
               " segments; using the earliest");
    }
    units.push_back(internal::UnitFromCandidate(doc, hits.front()));
  }

  std::stable_sort(units.begin(), units.end(),
                   [](const SummaryUnit& a, const SummaryUnit& b) {
                     if (a.doc_span.start != b.doc_span.start) {
                       return a.doc_span.start < b.doc_span.start;
                     }
                     // Longer first so that contained units follow their
                     // container and are dropped below.
                     return a.doc_span.end > b.doc_span.end;
                   });
  std::vector<SummaryUnit> kept;
  for (auto& u : units) {
    if (!kept.empty() && kept.back().doc_span.Contains(u.doc_span)) {
      warn(ErrorCode::kAmbiguousMatch,
           "dropping duplicate unit at " + ToString(u.doc_span));
      continue;
    }
    if (!kept.empty() && kept.back().doc_span.Overlaps(u.doc_span)) {
      throw Error(ErrorCode::kNotExtractive,
                  where + ": units " + ToString(kept.back().doc_span) +
                      " and " + ToString(u.doc_span) + " overlap");
    }
    kept.push_back(std::move(u));
  }

  std::u32string summary_text;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i > 0) summary_text += options.separator;
    kept[i].summary_span.start = summary_text.size();
    summary_text += kept[i].text;
    kept[i].summary_span.end = summary_text.size();
  }

  ExtractiveSummary summary{doc.doc_id, std::move(system_id), std::move(kept)};
  return AlignedSummary(std::move(summary), std::move(summary_text),
                        options.separator);
}

// Maps a summary-coordinate span to document coordinates. The span must lie
// within a single unit.
inline Span MapSummarySpan(const AlignedSummary& aligned, const Span& span) {
  if (span.start > span.end || span.end > aligned.summary_text().size()) {
    throw Error(ErrorCode::kOutOfBounds,
                ToString(span) + " outside summary text of length " +
                    std::to_string(aligned.summary_text().size()));
  }
  auto unit = aligned.UnitContaining(span);
  if (!unit) {
    throw Error(ErrorCode::kSpanStraddlesUnits,
                ToString(span) + " is not inside a single summary unit");
  }
  const SummaryUnit& u = aligned.units()[*unit];
  const std::size_t delta = span.start - u.summary_span.start;
  return Span{u.doc_span.start + delta, u.doc_span.start + delta + span.size()};
}

// Raw units that reproduce an aligned summary by coordinates.
inline std::vector<RawUnit> ToRawUnits(const AlignedSummary& aligned) {
  std::vector<RawUnit> out;
  for (const auto& u : aligned.units()) {
    out.push_back(u.kind == UnitKind::kEdu
                      ? RawUnit::AtEdu(u.doc_sentence_index, *u.edu_position)
                      : RawUnit::AtSentence(u.doc_sentence_index));
  }
  return out;
}

}  // namespace exteval

#endif  // EXTEVAL_CORPUS_H_
