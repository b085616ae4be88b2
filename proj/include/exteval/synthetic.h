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

// Seeded generator of small news-like documents with gold coreference
// clusters, optional EDU segmentation and sentence sentiment. Used to drive
// the error injector and property tests without any neural annotator.

#ifndef EXTEVAL_SYNTHETIC_H_
#define EXTEVAL_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exteval/annotations.h"
#include "exteval/corpus.h"

namespace exteval {

struct SyntheticDocument {
  Document doc;
  CorefAnnotation coref;
  SentimentAnnotation senti;
};

struct SyntheticOptions {
  std::size_t min_sentences = 4;
  std::size_t max_sentences = 10;
  double connective_rate = 0.3;
  double edu_rate = 0.3;
  double dateline_rate = 0.5;
};

namespace internal {

struct Entity {
  const char* name;
  const char* subject;  // sentence-initial pronoun
  const char* object;
  const char* det_noun;
};

inline constexpr Entity kEntities[] = {
    {"John Carter", "He", "him", "The engineer"},
    {"Maria Lopez", "She", "her", "The mayor"},
    {"Acme Corporation", "It", "it", "The company"},
    {"Local volunteers", "They", "them", "These volunteers"},
    {"Omar Haddad", "He", "him", "The coach"},
    {"Elena Petrova", "She", "her", "The scientist"},
    {"Harbor Bank", "It", "it", "The lender"},
    {"Two climbers", "They", "them", "Both climbers"},
};

inline constexpr const char* kPredicates[] = {
    "visited the old harbor",   "announced a new plan",
    "spoke to reporters on Monday", "praised the effort",
    "left the meeting early",   "signed the agreement",
    "raised concerns about the budget", "declined to comment",
};

inline constexpr const char* kClauses[] = {
    "while a small crowd watched.", "which surprised many residents.",
    "before the storm arrived.",    "after a long delay.",
};

inline constexpr const char* kConnectives[] = {
    "But", "However,", "Meanwhile,", "Also,", "Still,",
    "Moreover,", "And", "So", "Then",
};

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : rng_(seed) {}
  std::size_t Below(std::size_t n) { return n == 0 ? 0 : rng_() % n; }
  double Unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool Chance(double p) { return Unit() < p; }

 private:
  std::mt19937_64 rng_;
};

inline std::u32string Lowered(const char* s) {
  std::u32string out = utf8::Decode(s);
  // Lowercase only the first letter; names keep their capitals.
  if (!out.empty()) out[0] = text::AsciiLower(out[0]);
  return out;
}

}  // namespace internal

inline SyntheticDocument GenerateSyntheticDocument(
    std::uint64_t seed, const std::string& doc_id,
    const SyntheticOptions& options = {}) {
  internal::SplitMix rng(seed);
  const std::size_t n_sentences =
      options.min_sentences +
      rng.Below(options.max_sentences - options.min_sentences + 1);
  constexpr std::size_t kPool = std::size(internal::kEntities);
  const std::size_t n_entities = 2 + rng.Below(2);
  std::vector<std::size_t> entities;
  while (entities.size() < n_entities) {
    std::size_t e = rng.Below(kPool);
    if (std::find(entities.begin(), entities.end(), e) == entities.end()) {
      entities.push_back(e);
    }
  }

  std::u32string doc_text;
  std::vector<SentenceSpec> specs;
  std::vector<std::vector<std::pair<Span, std::u32string>>> clusters(
      n_entities);
  std::vector<bool> introduced(n_entities, false);
  std::vector<double> scores;

  auto add_mention = [&](std::size_t slot, const std::u32string& surface) {
    Span span{doc_text.size(), doc_text.size() + surface.size()};
    doc_text += surface;
    clusters[slot].emplace_back(span, surface);
  };

  for (std::size_t s = 0; s < n_sentences; ++s) {
    if (s > 0) doc_text += rng.Chance(0.3) ? U"\n" : U" ";
    const std::size_t start = doc_text.size();
    bool sentence_initial = true;
    if (s == 0 && rng.Chance(options.dateline_rate)) doc_text += U"(CNN) ";
    if (s > 0 && rng.Chance(options.connective_rate)) {
      doc_text += utf8::Decode(
          internal::kConnectives[rng.Below(std::size(internal::kConnectives))]);
      doc_text += U" ";
      sentence_initial = false;
    }
    // Subject: a name on first mention, otherwise a name, pronoun or
    // determiner phrase.
    const std::size_t slot = rng.Below(n_entities);
    const auto& ent = internal::kEntities[entities[slot]];
    std::u32string subject;
    if (!introduced[slot]) {
      subject = utf8::Decode(ent.name);
      introduced[slot] = true;
    } else {
      switch (rng.Below(3)) {
        case 0: subject = utf8::Decode(ent.name); break;
        case 1: subject = utf8::Decode(ent.subject); break;
        default: subject = utf8::Decode(ent.det_noun); break;
      }
    }
    if (!sentence_initial && subject != utf8::Decode(ent.name)) {
      subject = internal::Lowered(utf8::Encode(subject).c_str());
    }
    add_mention(slot, subject);
    doc_text += U" ";
    doc_text += utf8::Decode(
        internal::kPredicates[rng.Below(std::size(internal::kPredicates))]);

    // Optional object mention of an already introduced entity.
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < n_entities; ++k) {
      if (k != slot && introduced[k]) others.push_back(k);
    }
    if (!others.empty() && rng.Chance(0.4)) {
      const std::size_t obj = others[rng.Below(others.size())];
      const auto& oent = internal::kEntities[entities[obj]];
      doc_text += U" with ";
      add_mention(obj, rng.Chance(0.5) ? utf8::Decode(oent.object)
                                       : utf8::Decode(oent.name));
    }

    SentenceSpec spec;
    if (rng.Chance(options.edu_rate)) {
      doc_text += U",";
      const std::size_t edu0_end = doc_text.size();
      doc_text += U" ";
      const std::size_t edu1_start = doc_text.size();
      doc_text += utf8::Decode(
          internal::kClauses[rng.Below(std::size(internal::kClauses))]);
      spec.edus = {Span{start, edu0_end}, Span{edu1_start, doc_text.size()}};
    } else {
      doc_text += U".";
    }
    spec.span = Span{start, doc_text.size()};
    specs.push_back(std::move(spec));
    scores.push_back(static_cast<double>(rng.Below(101)) / 100.0);
  }

  SyntheticDocument out;
  out.doc = MakeDocument(doc_id, doc_text, specs);
  std::vector<std::vector<std::pair<Span, std::u32string>>> nonempty;
  for (auto& c : clusters) {
    if (!c.empty()) nonempty.push_back(std::move(c));
  }
  out.coref = MakeCoref(Scope::kDocument, out.doc.text, nonempty, doc_id,
                        LoadOptions{.strict = true});
  out.senti = SentimentAnnotation{Scope::kDocument, std::move(scores),
                                  "synthetic"};
  return out;
}

}  // namespace exteval

#endif  // EXTEVAL_SYNTHETIC_H_
