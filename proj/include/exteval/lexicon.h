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

// Word lists used by the rule-based detectors, mention classification and
// sentence-initial linking-term detection.

#ifndef EXTEVAL_LEXICON_H_
#define EXTEVAL_LEXICON_H_

#include <algorithm>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "exteval/common.h"
#include "exteval/corpus.h"

namespace exteval {

struct Lexicon {
  std::vector<std::string> pronouns = {"they", "she",  "he",    "it",  "this",
                                       "that", "those", "these", "them", "her",
                                       "him",  "their", "his"};
  std::vector<std::string> determiners = {"the",   "that",  "this",
                                          "these", "those", "both"};
  // Connectives that need the preceding sentence.
  std::vector<std::string> linking_terms = {
      "and",      "so",       "still",       "also",       "however",
      "but",      "clearly",  "meanwhile",   "not only",   "not just",
      "on one side", "on another", "then",   "moreover"};
  // Connectives that need the following sentence. Empty by default.
  std::vector<std::string> forward_linking_terms;
  // Sentence-initial dateline such as "(CNN)" or "LONDON, England (CNN) --".
  std::string dateline_pattern =
      R"(^(?:[A-Z][A-Za-z.'-]*(?:,? +[A-Z][A-Za-z.'-]*)*,? +)?)"
      R"(\([A-Z][A-Za-z. ]*\) *(?:--|-)? *)";
};

enum class MentionClass { kPronoun, kDetNoun, kOther };

inline const char* MentionClassName(MentionClass c) {
  switch (c) {
    case MentionClass::kPronoun: return "pronoun";
    case MentionClass::kDetNoun: return "det_noun";
    case MentionClass::kOther: return "other";
  }
  return "other";
}

// Lowercase, strip outer punctuation, collapse whitespace.
inline std::u32string NormalizeMention(std::u32string_view mention) {
  std::u32string s = text::NormalizeWhitespace(text::AsciiLower(mention));
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && !text::IsWordChar(s[b])) ++b;
  while (e > b && !text::IsWordChar(s[e - 1])) --e;
  return text::NormalizeWhitespace(s.substr(b, e - b));
}

inline bool InList(const std::vector<std::string>& list,
                   const std::u32string& word) {
  const std::string w = utf8::Encode(word);
  return std::find(list.begin(), list.end(), w) != list.end();
}

inline MentionClass ClassifyMention(std::u32string_view mention,
                                    const Lexicon& lexicon = {}) {
  const std::u32string norm = NormalizeMention(mention);
  if (norm.empty()) return MentionClass::kOther;
  if (InList(lexicon.pronouns, norm)) return MentionClass::kPronoun;
  const auto tokens = text::SplitWhitespace(norm);
  if (tokens.size() >= 2 && InList(lexicon.determiners, tokens.front())) {
    return MentionClass::kDetNoun;
  }
  return MentionClass::kOther;
}

enum class ContextRequirement { kPrevSentence, kNextSentence, kPrevEdu };

inline const char* ContextRequirementName(ContextRequirement r) {
  switch (r) {
    case ContextRequirement::kPrevSentence: return "prev_sentence";
    case ContextRequirement::kNextSentence: return "next_sentence";
    case ContextRequirement::kPrevEdu: return "prev_edu";
  }
  return "";
}

struct LinkingTerm {
  // Empty for EDU units, where the requirement holds regardless of wording.
  std::string term;
  ContextRequirement required_context;
};

// Offset of the first content character of a sentence, past leading
// punctuation and a parenthesized dateline.
inline std::size_t SkipSentencePrefix(std::u32string_view sentence,
                                      const Lexicon& lexicon) {
  auto skip_punct = [&](std::size_t i) {
    while (i < sentence.size() && !text::IsWordChar(sentence[i]) &&
           sentence[i] != U'(') {
      ++i;
    }
    return i;
  };
  std::size_t i = 0;
  while (i < sentence.size() && text::IsSpace(sentence[i])) ++i;
  if (!lexicon.dateline_pattern.empty()) {
    const std::string rest = utf8::Encode(sentence.substr(i));
    thread_local std::string cached_pattern;
    thread_local std::regex dateline;
    if (cached_pattern != lexicon.dateline_pattern) {
      dateline = std::regex(lexicon.dateline_pattern);
      cached_pattern = lexicon.dateline_pattern;
    }
    std::smatch m;
    if (std::regex_search(rest, m, dateline,
                          std::regex_constants::match_continuous) &&
        m.length(0) > 0) {
      i += utf8::CodePointCount(rest, static_cast<std::size_t>(m.length(0)));
    }
  }
  i = skip_punct(i);
  // A stray "(" that is not a dateline is punctuation too.
  while (i < sentence.size() && sentence[i] == U'(') i = skip_punct(i + 1);
  return i;
}

namespace internal {

// Longest list term that starts `s` at `pos` and ends on a word boundary.
inline std::optional<std::string> MatchTermAt(
    std::u32string_view s, std::size_t pos,
    const std::vector<std::string>& terms) {
  std::optional<std::string> best;
  std::size_t best_len = 0;
  for (const auto& term : terms) {
    const std::u32string t = text::AsciiLower(utf8::Decode(term));
    const std::u32string norm_t = text::NormalizeWhitespace(t);
    // Match token by token so that any whitespace run separates words.
    std::size_t i = pos;
    std::size_t k = 0;
    bool ok = true;
    while (k < norm_t.size()) {
      if (norm_t[k] == U' ') {
        if (i >= s.size() || !text::IsSpace(s[i])) {
          ok = false;
          break;
        }
        while (i < s.size() && text::IsSpace(s[i])) ++i;
        ++k;
        continue;
      }
      if (i >= s.size() || text::AsciiLower(s[i]) != norm_t[k]) {
        ok = false;
        break;
      }
      ++i;
      ++k;
    }
    if (!ok || norm_t.empty()) continue;
    if (i < s.size() && text::IsWordChar(s[i])) continue;
    if (norm_t.size() > best_len) {
      best_len = norm_t.size();
      best = utf8::Encode(norm_t);
    }
  }
  return best;
}

}  // namespace internal

// Discourse requirement of a summary unit. Full sentences need context when
// they open with a listed connective; EDUs need their in-sentence
// predecessor whenever they are not the first unit of their sentence.
inline std::optional<LinkingTerm> DetectLinkingTerm(
    const SummaryUnit& unit, const Lexicon& lexicon = {}) {
  if (unit.kind == UnitKind::kEdu) {
    if (unit.edu_position.value_or(0) > 0) {
      return LinkingTerm{"", ContextRequirement::kPrevEdu};
    }
    return std::nullopt;
  }
  const std::size_t pos = SkipSentencePrefix(unit.text, lexicon);
  auto backward = internal::MatchTermAt(unit.text, pos, lexicon.linking_terms);
  auto forward =
      internal::MatchTermAt(unit.text, pos, lexicon.forward_linking_terms);
  if (backward && (!forward || backward->size() >= forward->size())) {
    return LinkingTerm{*backward, ContextRequirement::kPrevSentence};
  }
  if (forward) return LinkingTerm{*forward, ContextRequirement::kNextSentence};
  return std::nullopt;
}

}  // namespace exteval

#endif  // EXTEVAL_LEXICON_H_
