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

#include "exteval/rouge.h"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.h"

namespace exteval {
namespace {

TEST(RougeTokenizeTest, LowercasesAndSplitsOnNonWordChars) {
  const auto t = RougeTokenize(U"The Cat's 8,850-meter climb!");
  const std::vector<std::u32string> want = {U"the", U"cat", U"s", U"8", U"850",
                                            U"meter", U"climb"};
  EXPECT_EQ(t, want);
}

// Each expected value is enumerated by hand: F = 2 * clipped overlap /
// (candidate bigrams + reference bigrams).
TEST(Rouge2Test, HandEnumeratedCases) {
  // {the cat, cat sat} vs {the cat, cat ran}: overlap 1 of 2 + 2.
  EXPECT_EQ(Rouge2F1("the cat sat", "the cat ran"), 0.5);
  // 3 vs 2 bigrams, overlap 2.
  EXPECT_EQ(Rouge2F1("a b c d", "a b c"), 0.8);
  // {a a: 2} vs {a a: 1}: clipped overlap 1 of 2 + 1.
  EXPECT_EQ(Rouge2F1("a a a", "a a"), 2.0 / 3.0);
  // Case and punctuation do not matter.
  EXPECT_EQ(Rouge2F1("The Cat, sat!", "the cat sat"), 1.0);
  // {x y: 2, y x: 1} vs {y x: 2, x y: 1}: overlap 1 + 1 of 3 + 3.
  EXPECT_EQ(Rouge2F1("x y x y", "y x y x"), 2.0 / 3.0);
  // A single token has no bigram.
  EXPECT_EQ(Rouge2F1("one", "one"), 0.0);
  EXPECT_EQ(Rouge2F1("", "a b"), 0.0);
}

TEST(Rouge2Test, IdentityIsOneAndDisjointIsZero) {
  EXPECT_EQ(Rouge2F1("climbers leave their trash", "climbers leave their trash"),
            1.0);
  EXPECT_EQ(Rouge2F1("climbers leave trash", "nepal requires permits"), 0.0);
  // Shared unigrams without a shared bigram still give 0.
  EXPECT_EQ(Rouge2F1("a b c", "c b a"), 0.0);
}

TEST(Rouge2Test, NonAsciiTokensAreKept) {
  EXPECT_EQ(Rouge2F1("Zoë Ødegård ran", "zoë Ødegård ran"), 1.0);
  EXPECT_EQ(Rouge2F1("東京 is big", "大阪 is big"), 0.5);
}

TEST(Rouge2Test, MatchesBruteForceOracleAndIsSymmetric) {
  std::mt19937_64 rng(42);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  auto random_tokens = [&] {
    std::vector<std::string> t(rng() % 9);
    for (auto& w : t) w = vocab[rng() % vocab.size()];
    return t;
  };
  auto join = [](const std::vector<std::string>& t) {
    std::string s;
    for (const auto& w : t) s += w + " ";
    return s;
  };
  for (int i = 0; i < 2000; ++i) {
    const auto c = random_tokens();
    const auto r = random_tokens();
    const double got = Rouge2F1(join(c), join(r));
    EXPECT_EQ(got, testing::oracle::NaiveRouge2(c, r));
    EXPECT_EQ(got, Rouge2F1(join(r), join(c)));
    EXPECT_GE(got, 0.0);
    EXPECT_LE(got, 1.0);
  }
}

}  // namespace
}  // namespace exteval
