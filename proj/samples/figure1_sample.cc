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

// Scores the three summaries of the bundled Mount Everest example and prints
// each summary's flags and the evidence behind them.
//
//   figure1_sample [DATASET_DIR]   (default: data/figure1)

#include <iostream>
#include <string>

#include "exteval/exteval.h"

int main(int argc, char** argv) {
  exteval::RunConfig config;
  config.SetDatasetRoot(argc > 1 ? argv[1] : "data/figure1");
  try {
    const exteval::ScoreRun run = exteval::ScoreCorpus(config);
    for (const auto& r : run.records) {
      const auto& s = r.score;
      std::cout << r.system_id << ": incor_coref=" << s.incor_coref.flag
                << " incom_coref=" << s.incom_coref.flag
                << " incom_disco=" << s.incom_disco.flag
                << " senti_bias=" << exteval::csv::FormatDouble(s.senti_bias)
                << " total=" << exteval::csv::FormatDouble(s.total) << "\n";
      for (const auto* sub : {&s.incor_coref, &s.incom_coref, &s.incom_disco}) {
        for (const auto& e : sub->evidence) {
          std::cout << "  " << e.rule << ": " << e.note << "\n";
        }
      }
    }
    for (const auto& f : run.failures) {
      std::cerr << f.doc_id << "/" << f.system_id << ": " << f.message << "\n";
    }
    return run.failures.empty() ? 0 : 1;
  } catch (const exteval::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
