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

// exteval command-line tool.
//
//   exteval validate --dataset DIR
//   exteval score    --dataset DIR --out OUT
//   exteval metaeval --labels human.csv --scores OUT/scores --out OUT
//   exteval report   --out OUT [--labels human.csv] [--markdown]
//   exteval inject   --dataset DIR --out FIXTURES [--seed N]
//   exteval inject   --synthetic N --out FIXTURES [--seed N]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "exteval/pipeline.h"

namespace {

struct Flags {
  std::string config;
  std::string dataset;
  std::string corpus;
  std::string annotations;
  std::string systems;
  std::string references;
  std::string labels;
  std::string expected;
  std::vector<std::string> scores;
  std::vector<std::string> system_ids;
  std::string out;
  bool strict = false;
  bool no_sentibias = false;
  bool markdown = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;
  std::size_t synthetic = 0;
};

void AddCommonFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file (or $EXTEVAL_CONFIG)");
  cmd->add_option("--dataset", f.dataset,
                  "dataset root holding corpus/, annotations/, systems/");
  cmd->add_option("--corpus", f.corpus, "corpus directory");
  cmd->add_option("--annotations", f.annotations, "annotations directory");
  cmd->add_option("--systems", f.systems, "system summaries directory");
  cmd->add_option("--references", f.references, "reference summaries directory");
  cmd->add_option("--system", f.system_ids, "restrict to these system ids");
  cmd->add_option("--labels", f.labels, "human labels CSV");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_flag("--strict", f.strict, "promote warnings to errors");
  cmd->add_option("--jobs", f.jobs, "worker threads (0: all cores)");
  cmd->add_flag("--markdown", f.markdown, "also write markdown reports");
}

exteval::RunConfig BuildConfig(const Flags& f, const CLI::App& cmd) {
  exteval::RunConfig config;
  std::string config_path = f.config;
  if (config_path.empty()) {
    if (const char* env = std::getenv("EXTEVAL_CONFIG")) config_path = env;
  }
  if (!config_path.empty()) exteval::LoadConfigFile(config_path, config);
  auto given = [&](const char* name) {
    const CLI::Option* opt = cmd.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--corpus")) config.corpus_dir = f.corpus;
  if (given("--annotations")) config.annotations_dir = f.annotations;
  if (given("--systems")) config.systems_dir = f.systems;
  if (given("--references")) config.references_dir = f.references;
  if (given("--labels")) config.labels_path = f.labels;
  if (given("--expected")) config.expected_path = f.expected;
  if (given("--out")) config.output_dir = f.out;
  if (given("--system")) config.systems = f.system_ids;
  if (given("--strict")) config.strict = true;
  if (given("--no-sentibias")) config.use_sentiment = false;
  if (given("--markdown")) config.markdown = true;
  if (given("--seed")) config.seed = f.seed;
  if (given("--jobs")) config.jobs = f.jobs;
  if (given("--synthetic")) config.synthetic_docs = f.synthetic;
  for (const auto& s : f.scores) {
    config.scores.push_back(exteval::ParseMetricSource(s));
  }
  if (given("--dataset")) {
    config.SetDatasetRoot(f.dataset);
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive summary error detection and meta-evaluation"};
  app.require_subcommand(1);
  Flags f;

  auto* validate = app.add_subcommand("validate", "check a dataset");
  AddCommonFlags(validate, f);

  auto* score = app.add_subcommand("score", "score every summary");
  AddCommonFlags(score, f);
  score->add_option("--expected", f.expected,
                    "injector expectations to check against");
  score->add_flag("--no-sentibias", f.no_sentibias,
                  "drop SentiBias from the total");

  auto* metaeval = app.add_subcommand("metaeval", "correlate metrics with labels");
  AddCommonFlags(metaeval, f);
  metaeval->add_option("--scores", f.scores,
                       "metric CSV or directory, optionally path:orientation");

  auto* report = app.add_subcommand("report", "summarize a score run");
  AddCommonFlags(report, f);

  auto* inject = app.add_subcommand("inject", "build error-injection fixtures");
  AddCommonFlags(inject, f);
  inject->add_option("--seed", f.seed, "base random seed");
  inject->add_option("--synthetic", f.synthetic,
                     "generate this many synthetic documents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exteval::kExitOk : exteval::kExitUsage;
  }

  try {
    for (auto* cmd : {validate, score, metaeval, report, inject}) {
      if (!cmd->parsed()) continue;
      const exteval::RunConfig config = BuildConfig(f, *cmd);
      if (cmd == validate) return exteval::CmdValidate(config, std::cout);
      if (cmd == score) return exteval::CmdScore(config, std::cout);
      if (cmd == metaeval) return exteval::CmdMetaeval(config, std::cout);
      if (cmd == report) return exteval::CmdReport(config, std::cout);
      if (cmd == inject) return exteval::CmdInject(config, std::cout);
    }
  } catch (const exteval::Error& e) {
    std::cerr << "exteval: " << e.what() << "\n";
    return e.code() == exteval::ErrorCode::kUsage ? exteval::kExitUsage
                                                  : exteval::kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "exteval: " << e.what() << "\n";
    return exteval::kExitFailure;
  }
  return exteval::kExitUsage;
}
