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

// ROUGE-2 F1 over a lowercase alphanumeric tokenization (no stemming, no
// stopword removal).

#ifndef EXTEVAL_ROUGE_H_
#define EXTEVAL_ROUGE_H_

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exteval/common.h"

namespace exteval {

inline std::vector<std::u32string> RougeTokenize(std::u32string_view in) {
  std::vector<std::u32string> tokens;
  std::u32string cur;
  for (char32_t c : in) {
    if (text::IsWordChar(c)) {
      cur.push_back(text::AsciiLower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

using BigramCounts = std::map<std::pair<std::u32string, std::u32string>, int>;

inline BigramCounts CountBigrams(const std::vector<std::u32string>& tokens) {
  BigramCounts counts;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    ++counts[{tokens[i], tokens[i + 1]}];
  }
  return counts;
}

inline double Rouge2F1(std::u32string_view candidate,
                       std::u32string_view reference) {
  const auto cand = CountBigrams(RougeTokenize(candidate));
  const auto ref = CountBigrams(RougeTokenize(reference));
  int cand_total = 0;
  int ref_total = 0;
  int overlap = 0;
  for (const auto& [bigram, n] : cand) cand_total += n;
  for (const auto& [bigram, n] : ref) {
    ref_total += n;
    if (auto it = cand.find(bigram); it != cand.end()) {
      overlap += std::min(n, it->second);
    }
  }
  if (cand_total == 0 || ref_total == 0 || overlap == 0) return 0.0;
  // 2PR/(P+R) with P = overlap/cand_total and R = overlap/ref_total.
  return 2.0 * overlap / static_cast<double>(cand_total + ref_total);
}

inline double Rouge2F1(std::string_view candidate, std::string_view reference) {
  return Rouge2F1(utf8::Decode(candidate), utf8::Decode(reference));
}

}  // namespace exteval

#endif  // EXTEVAL_ROUGE_H_
