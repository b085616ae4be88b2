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

// Pearson and Spearman correlation with an explicit undefined state.

#ifndef EXTEVAL_CORRELATION_H_
#define EXTEVAL_CORRELATION_H_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exteval/common.h"

namespace exteval {

enum class Measure { kPearson, kSpearman };

inline const char* MeasureName(Measure m) {
  return m == Measure::kPearson ? "pearson" : "spearman";
}

struct CorrelationResult {
  Measure measure = Measure::kPearson;
  // Unset when either input is constant or there are fewer than two pairs.
  std::optional<double> value;
  std::size_t n_pairs = 0;
  std::size_t n_skipped = 0;
  std::string notes;

  bool defined() const { return value.has_value(); }
};

inline CorrelationResult Pearson(std::span<const double> x,
                                 std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  CorrelationResult r;
  r.measure = Measure::kPearson;
  r.n_pairs = x.size();
  if (x.size() < 2) {
    r.notes = "fewer than two pairs";
    return r;
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    r.notes = "constant input";
    return r;
  }
  r.value = std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
  return r;
}

// 1-based ranks; tied values share the mean of the ranks they span.
inline std::vector<double> FractionalRanks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

inline CorrelationResult Spearman(std::span<const double> x,
                                  std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  const auto rx = FractionalRanks(x);
  const auto ry = FractionalRanks(y);
  CorrelationResult r = Pearson(rx, ry);
  r.measure = Measure::kSpearman;
  return r;
}

inline CorrelationResult Correlate(Measure m, std::span<const double> x,
                                   std::span<const double> y) {
  return m == Measure::kPearson ? Pearson(x, y) : Spearman(x, y);
}

}  // namespace exteval

#endif  // EXTEVAL_CORRELATION_H_
