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

#include "exteval/lexicon.h"

#include <gtest/gtest.h>

namespace exteval {
namespace {

SummaryUnit SentenceUnit(const std::u32string& text) {
  SummaryUnit u;
  u.kind = UnitKind::kSentence;
  u.text = text;
  return u;
}

std::string TermOf(const std::u32string& text, const Lexicon& lexicon = {}) {
  auto t = DetectLinkingTerm(SentenceUnit(text), lexicon);
  return t ? t->term : "<none>";
}

TEST(ClassifyMentionTest, PronounsDeterminersAndOthers) {
  EXPECT_EQ(ClassifyMention(U"they"), MentionClass::kPronoun);
  EXPECT_EQ(ClassifyMention(U"Her"), MentionClass::kPronoun);
  EXPECT_EQ(ClassifyMention(U"\"That"), MentionClass::kPronoun);
  EXPECT_EQ(ClassifyMention(U"The mountain"), MentionClass::kDetNoun);
  EXPECT_EQ(ClassifyMention(U"both  teams"), MentionClass::kDetNoun);
  EXPECT_EQ(ClassifyMention(U"Mount Everest"), MentionClass::kOther);
  EXPECT_EQ(ClassifyMention(U"the"), MentionClass::kOther);
  EXPECT_EQ(ClassifyMention(U"theirs"), MentionClass::kOther);
  EXPECT_EQ(ClassifyMention(U""), MentionClass::kOther);
}

TEST(ClassifyMentionTest, CustomListsReplaceDefaults) {
  Lexicon lx;
  lx.pronouns = {"ella"};
  EXPECT_EQ(ClassifyMention(U"Ella", lx), MentionClass::kPronoun);
  EXPECT_EQ(ClassifyMention(U"they", lx), MentionClass::kOther);
}

TEST(LinkingTermTest, SentenceInitialConnectives) {
  EXPECT_EQ(TermOf(U"But they do leave their trash."), "but");
  EXPECT_EQ(TermOf(U"However, nobody came."), "however");
  EXPECT_EQ(TermOf(U"STILL the rain fell."), "still");
  EXPECT_EQ(TermOf(U"Then it rained."), "then");
  EXPECT_EQ(TermOf(U"Moreover: more."), "moreover");
}

TEST(LinkingTermTest, RequiresWordBoundary) {
  EXPECT_EQ(TermOf(U"Android phones sold well."), "<none>");
  EXPECT_EQ(TermOf(U"Thence we left."), "<none>");
  EXPECT_EQ(TermOf(U"Sometimes it rains."), "<none>");
  EXPECT_EQ(TermOf(U"Also-rans were there."), "also");
}

TEST(LinkingTermTest, OnlySentenceInitialPositionCounts) {
  EXPECT_EQ(TermOf(U"The team, however, stayed."), "<none>");
  EXPECT_EQ(TermOf(U"Climbers died but others lived."), "<none>");
}

TEST(LinkingTermTest, MultiwordTermsMatchLongestFirst) {
  EXPECT_EQ(TermOf(U"Not only did it rain, it poured."), "not only");
  EXPECT_EQ(TermOf(U"On  one side, the river."), "on one side");
  EXPECT_EQ(TermOf(U"On another, the hills."), "on another");
  EXPECT_EQ(TermOf(U"On Monday we left."), "<none>");

  Lexicon lx;
  lx.linking_terms = {"so", "so far"};
  EXPECT_EQ(TermOf(U"So far so good.", lx), "so far");
}

TEST(LinkingTermTest, SkipsDatelinesAndLeadingPunctuation) {
  EXPECT_EQ(TermOf(U"(CNN) But the climbers left."), "but");
  EXPECT_EQ(TermOf(U"LONDON, England (CNN) -- Meanwhile, in Paris."),
            "meanwhile");
  EXPECT_EQ(TermOf(U"WASHINGTON (AP) - And so it went."), "and");
  EXPECT_EQ(TermOf(U"\"But we never knew,\" she said."), "but");
  EXPECT_EQ(TermOf(U"  -- So, what now?"), "so");
  EXPECT_EQ(TermOf(U"(CNN) Most climbers fail."), "<none>");
}

TEST(LinkingTermTest, EmptyDatelinePatternDisablesSkipping) {
  Lexicon lx;
  lx.dateline_pattern.clear();
  // "(" is still skipped as punctuation, but "CNN" then blocks the match.
  EXPECT_EQ(TermOf(U"(CNN) But no.", lx), "<none>");
}

TEST(LinkingTermTest, ForwardTermsNeedTheNextSentence) {
  Lexicon lx;
  lx.forward_linking_terms = {"first", "on one side"};
  auto t = DetectLinkingTerm(SentenceUnit(U"First, we climb."), lx);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->term, "first");
  EXPECT_EQ(t->required_context, ContextRequirement::kNextSentence);
  // A tie between lists goes to the backward reading.
  t = DetectLinkingTerm(SentenceUnit(U"On one side, rocks."), lx);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->required_context, ContextRequirement::kPrevSentence);
}

TEST(LinkingTermTest, EdusNeedTheirPredecessorUnlessFirst) {
  SummaryUnit u;
  u.kind = UnitKind::kEdu;
  u.text = U"to clean up the trash";
  u.edu_position = 1;
  auto t = DetectLinkingTerm(u);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->required_context, ContextRequirement::kPrevEdu);
  u.edu_position = 0;
  u.text = U"But the first unit";
  EXPECT_FALSE(DetectLinkingTerm(u).has_value());
}

}  // namespace
}  // namespace exteval
