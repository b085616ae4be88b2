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

#include "exteval/corpus.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace exteval {
namespace {

using ::exteval::testing::BuildDocument;
using ::exteval::testing::Find;

Document ThreeSentences() {
  return BuildDocument("d", {{"Alpha one."},
                             {"Beta two,", "gamma three."},
                             {"Delta four."}});
}

TEST(MakeDocumentTest, SlicesSentencesAndEdus) {
  const Document doc = ThreeSentences();
  ASSERT_EQ(doc.sentences.size(), 3u);
  EXPECT_EQ(doc.sentences[1].text, U"Beta two, gamma three.");
  ASSERT_EQ(doc.sentences[1].edus.size(), 2u);
  EXPECT_EQ(doc.sentences[1].edus[1].text, U"gamma three.");
  EXPECT_EQ(doc.SentenceContaining(Find(doc.text, "gamma")), 1u);
  EXPECT_FALSE(doc.SentenceContaining(Span{0, 20}).has_value());
}

TEST(MakeDocumentTest, RejectsOverlappingSentences) {
  EXPECT_THROW(MakeDocument("d", U"abcdef", {{Span{0, 4}, {}}, {Span{3, 6}, {}}}),
               Error);
}

TEST(MakeDocumentTest, RejectsEduOutsideSentence) {
  try {
    MakeDocument("d", U"abcdef", {{Span{0, 3}, {Span{1, 5}}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
  }
}

TEST(MakeDocumentTest, RejectsSpanPastEndOfText) {
  EXPECT_THROW(MakeDocument("d", U"abc", {{Span{0, 4}, {}}}), Error);
}

TEST(AlignTest, MatchesTextIgnoringWhitespaceAndSortsUnits) {
  const Document doc = ThreeSentences();
  const auto aligned = AlignSummaryToDocument(
      {RawUnit::Text(U"Delta   four."), RawUnit::Text(U"  Alpha one.\n")}, doc,
      "sys");
  ASSERT_EQ(aligned.units().size(), 2u);
  EXPECT_EQ(aligned.units()[0].doc_sentence_index, 0u);
  EXPECT_EQ(aligned.units()[1].doc_sentence_index, 2u);
  EXPECT_EQ(aligned.summary_text(), U"Alpha one. Delta four.");
  EXPECT_EQ(aligned.units()[1].summary_span, (Span{11, 22}));
}

TEST(AlignTest, FallsBackToEdusWhenNoSentenceMatches) {
  const Document doc = ThreeSentences();
  const auto aligned =
      AlignSummaryToDocument({RawUnit::Text(U"gamma three.")}, doc);
  ASSERT_EQ(aligned.units().size(), 1u);
  EXPECT_EQ(aligned.units()[0].kind, UnitKind::kEdu);
  EXPECT_EQ(aligned.units()[0].edu_position, 1u);
}

TEST(AlignTest, CoordinatesSelectUnitsDirectly) {
  const Document doc = ThreeSentences();
  const auto aligned = AlignSummaryToDocument(
      {RawUnit::AtEdu(1, 0), RawUnit::AtSentence(2)}, doc);
  EXPECT_EQ(aligned.summary_text(), U"Beta two, Delta four.");
  EXPECT_EQ(ToRawUnits(aligned)[0].edu, 0u);
}

TEST(AlignTest, NonExtractiveTextIsRejected) {
  const Document doc = ThreeSentences();
  try {
    AlignSummaryToDocument({RawUnit::Text(U"Alpha two.")}, doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotExtractive);
  }
}

TEST(AlignTest, OutOfRangeIndexIsRejected) {
  const Document doc = ThreeSentences();
  try {
    AlignSummaryToDocument({RawUnit::AtSentence(3)}, doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  EXPECT_THROW(AlignSummaryToDocument({RawUnit::AtEdu(0, 0)}, doc), Error);
}

TEST(AlignTest, EmptySummaryIsRejected) {
  try {
    AlignSummaryToDocument({}, ThreeSentences());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySummary);
  }
}

TEST(AlignTest, AmbiguousTextTakesEarliestWithWarning) {
  const Document doc = BuildDocument({"Same.", "Other.", "Same."});
  Diagnostics diags;
  const auto aligned =
      AlignSummaryToDocument({RawUnit::Text(U"Same.")}, doc, "s", {}, &diags);
  EXPECT_EQ(aligned.units()[0].doc_sentence_index, 0u);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, ErrorCode::kAmbiguousMatch);

  AlignOptions strict;
  strict.strict = true;
  EXPECT_THROW(
      AlignSummaryToDocument({RawUnit::Text(U"Same.")}, doc, "s", strict),
      Error);
}

TEST(AlignTest, SentenceIndexDisambiguatesText) {
  const Document doc = BuildDocument({"Same.", "Other.", "Same."});
  RawUnit u = RawUnit::Text(U"Same.");
  u.sentence = 2;
  Diagnostics diags;
  const auto aligned = AlignSummaryToDocument({u}, doc, "s", {}, &diags);
  EXPECT_EQ(aligned.units()[0].doc_sentence_index, 2u);
  EXPECT_TRUE(diags.empty());
}

TEST(AlignTest, DuplicateAndContainedUnitsAreDropped) {
  const Document doc = ThreeSentences();
  Diagnostics diags;
  const auto aligned = AlignSummaryToDocument(
      {RawUnit::AtSentence(1), RawUnit::AtEdu(1, 1), RawUnit::AtSentence(1)},
      doc, "s", {}, &diags);
  EXPECT_EQ(aligned.units().size(), 1u);
  EXPECT_EQ(diags.size(), 2u);
}

TEST(MapSummarySpanTest, MapsInsideUnitAndRejectsStraddling) {
  const Document doc = ThreeSentences();
  const auto aligned = AlignSummaryToDocument(
      {RawUnit::AtSentence(0), RawUnit::AtSentence(2)}, doc);
  const Span delta = Find(aligned.summary_text(), "Delta");
  EXPECT_EQ(MapSummarySpan(aligned, delta), Find(doc.text, "Delta"));
  EXPECT_EQ(aligned.MapDocumentSpan(Find(doc.text, "Delta")), delta);
  EXPECT_FALSE(aligned.MapDocumentSpan(Find(doc.text, "Beta")).has_value());

  try {
    MapSummarySpan(aligned, Span{5, 15});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpanStraddlesUnits);
  }
  try {
    MapSummarySpan(aligned, Span{0, 100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfBounds);
  }
}

TEST(MapSummarySpanTest, OffsetsCountCodePointsNotBytes) {
  const Document doc = BuildDocument({"Café crème.", "Le señor habló."});
  const auto aligned = AlignSummaryToDocument({RawUnit::AtSentence(1)}, doc);
  const Span s = Find(aligned.summary_text(), "habló");
  EXPECT_EQ(s, (Span{9, 14}));
  const Span d = MapSummarySpan(aligned, s);
  EXPECT_EQ(doc.Slice(d), U"habló");
  EXPECT_EQ(d.start, 12u + 9u);
}

}  // namespace
}  // namespace exteval
