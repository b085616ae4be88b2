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

// On-disk dataset layout:
//
//   corpus/<doc_id>.txt                           raw UTF-8 text
//   corpus/<doc_id>.sents.jsonl                   {index, start, end, edus?}
//   references/<doc_id>.txt                       optional reference summary
//   systems/<system_id>/<doc_id>.summ.json        {units: [...]}
//   annotations/<doc_id>.coref.json               document coreference
//   annotations/<doc_id>.senti.json               document sentiment
//   annotations/<system_id>/<doc_id>.summcoref.json
//   annotations/<system_id>/<doc_id>.summsenti.json   optional
//   labels/human.csv
//   scores/<metric>.csv
//
// All offsets count Unicode scalar values.

#ifndef EXTEVAL_DATASET_H_
#define EXTEVAL_DATASET_H_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "exteval/annotations.h"
#include "exteval/common.h"
#include "exteval/corpus.h"

namespace exteval {

namespace fs = std::filesystem;

inline std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << content;
}

inline nlohmann::json ReadJson(const fs::path& path) {
  try {
    return nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError, path.string() + ": " + e.what());
  }
}

struct DatasetPaths {
  fs::path corpus;
  fs::path annotations;
  fs::path systems;
  fs::path references;

  static DatasetPaths FromRoot(const fs::path& root) {
    return {root / "corpus", root / "annotations", root / "systems",
            root / "references"};
  }

  fs::path Text(const std::string& doc) const { return corpus / (doc + ".txt"); }
  fs::path Sentences(const std::string& doc) const {
    return corpus / (doc + ".sents.jsonl");
  }
  fs::path Reference(const std::string& doc) const {
    return references / (doc + ".txt");
  }
  fs::path Summary(const std::string& sys, const std::string& doc) const {
    return systems / sys / (doc + ".summ.json");
  }
  fs::path DocCoref(const std::string& doc) const {
    return annotations / (doc + ".coref.json");
  }
  fs::path DocSenti(const std::string& doc) const {
    return annotations / (doc + ".senti.json");
  }
  fs::path SummaryCoref(const std::string& sys, const std::string& doc) const {
    return annotations / sys / (doc + ".summcoref.json");
  }
  fs::path SummarySenti(const std::string& sys, const std::string& doc) const {
    return annotations / sys / (doc + ".summsenti.json");
  }
};

// Document ids: every corpus/<id>.txt, sorted.
inline std::vector<std::string> ListDocIds(const fs::path& corpus_dir) {
  if (!fs::is_directory(corpus_dir)) {
    throw Error(ErrorCode::kIoError,
                corpus_dir.string() + " is not a directory");
  }
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > 4 &&
        name.ends_with(".txt")) {
      ids.push_back(name.substr(0, name.size() - 4));
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::vector<std::string> ListSystems(const fs::path& systems_dir) {
  std::vector<std::string> ids;
  if (!fs::is_directory(systems_dir)) return ids;
  for (const auto& entry : fs::directory_iterator(systems_dir)) {
    if (entry.is_directory()) ids.push_back(entry.path().filename().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline Document ParseDocument(const std::string& doc_id,
                              const std::string& raw_text,
                              const std::string& sents_jsonl,
                              const std::string& where) {
  std::vector<SentenceSpec> specs;
  std::istringstream lines(sents_jsonl);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string at = where + ":" + std::to_string(lineno);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kSchemaError, at + ": " + e.what());
    }
    auto offset = [&](const nlohmann::json& o, const char* key) {
      if (!o.contains(key) || !o[key].is_number_unsigned()) {
        throw Error(ErrorCode::kSchemaError,
                    at + ": missing non-negative integer \"" + key + "\"");
      }
      return o[key].get<std::size_t>();
    };
    if (j.contains("index") && offset(j, "index") != specs.size()) {
      throw Error(ErrorCode::kSchemaError,
                  at + ": sentence index " + std::to_string(offset(j, "index")) +
                      " out of sequence");
    }
    SentenceSpec spec;
    spec.span = Span{offset(j, "start"), offset(j, "end")};
    if (j.contains("edus")) {
      if (!j["edus"].is_array()) {
        throw Error(ErrorCode::kSchemaError, at + ": edus must be a list");
      }
      for (const auto& e : j["edus"]) {
        spec.edus.push_back(Span{offset(e, "start"), offset(e, "end")});
      }
    }
    specs.push_back(std::move(spec));
  }
  return MakeDocument(doc_id, utf8::Decode(raw_text), specs);
}

inline Document LoadDocument(const DatasetPaths& paths,
                             const std::string& doc_id) {
  if (!fs::exists(paths.Text(doc_id))) {
    throw Error(ErrorCode::kMissingDoc, paths.Text(doc_id).string());
  }
  if (!fs::exists(paths.Sentences(doc_id))) {
    throw Error(ErrorCode::kMissingDoc,
                paths.Sentences(doc_id).string() + " (sentence segmentation)");
  }
  return ParseDocument(doc_id, ReadFile(paths.Text(doc_id)),
                       ReadFile(paths.Sentences(doc_id)),
                       paths.Sentences(doc_id).string());
}

inline std::string SerializeSentences(const Document& doc) {
  std::string out;
  for (const auto& s : doc.sentences) {
    nlohmann::json j = {{"index", s.index},
                        {"start", s.span.start},
                        {"end", s.span.end}};
    if (!s.edus.empty()) {
      nlohmann::json edus = nlohmann::json::array();
      for (const auto& e : s.edus) {
        edus.push_back({{"start", e.span.start}, {"end", e.span.end}});
      }
      j["edus"] = std::move(edus);
    }
    out += j.dump() + "\n";
  }
  return out;
}

inline void WriteDocument(const DatasetPaths& paths, const Document& doc) {
  WriteFile(paths.Text(doc.doc_id), utf8::Encode(doc.text));
  WriteFile(paths.Sentences(doc.doc_id), SerializeSentences(doc));
}

inline std::vector<RawUnit> ParseSummaryUnits(const nlohmann::json& j,
                                              const std::string& where) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    if (!j.contains("units")) {
      throw Error(ErrorCode::kSchemaError, where + ": expected {units: [...]}");
    }
    list = &j["units"];
  }
  if (!list->is_array()) {
    throw Error(ErrorCode::kSchemaError, where + ": units must be a list");
  }
  std::vector<RawUnit> units;
  for (const auto& ju : *list) {
    RawUnit u;
    if (ju.is_string()) {
      u.text = utf8::Decode(ju.get<std::string>());
    } else if (ju.is_number_unsigned()) {
      u.sentence = ju.get<std::size_t>();
    } else if (ju.is_object()) {
      if (ju.contains("text")) {
        if (!ju["text"].is_string()) {
          throw Error(ErrorCode::kSchemaError, where + ": text must be a string");
        }
        u.text = utf8::Decode(ju["text"].get<std::string>());
      }
      for (const char* key : {"sentence", "edu"}) {
        if (!ju.contains(key)) continue;
        if (!ju[key].is_number_unsigned()) {
          throw Error(ErrorCode::kSchemaError,
                      where + ": " + key + " must be a non-negative integer");
        }
        (std::string(key) == "sentence" ? u.sentence : u.edu) =
            ju[key].get<std::size_t>();
      }
    } else {
      throw Error(ErrorCode::kSchemaError,
                  where + ": a unit is a string, an index or an object");
    }
    units.push_back(std::move(u));
  }
  return units;
}

inline std::vector<RawUnit> LoadSummaryUnits(const fs::path& path) {
  if (!fs::exists(path)) throw Error(ErrorCode::kMissingDoc, path.string());
  return ParseSummaryUnits(ReadJson(path), path.string());
}

// Coordinate form of an aligned summary, with texts for readability.
inline std::string SerializeSummaryUnits(const AlignedSummary& aligned) {
  nlohmann::json units = nlohmann::json::array();
  for (const auto& u : aligned.units()) {
    nlohmann::json ju = {{"sentence", u.doc_sentence_index},
                         {"text", utf8::Encode(u.text)}};
    if (u.edu_position) ju["edu"] = *u.edu_position;
    units.push_back(std::move(ju));
  }
  return nlohmann::json{{"units", std::move(units)}}.dump(1) + "\n";
}

inline CorefAnnotation LoadCoref(const fs::path& path, Scope scope,
                                 const std::u32string& scope_text,
                                 const LoadOptions& options,
                                 Diagnostics* diagnostics) {
  if (!fs::exists(path)) throw Error(ErrorCode::kMissingDoc, path.string());
  return ParseCoref(ReadJson(path), scope, scope_text, path.string(), options,
                    diagnostics);
}

inline SentimentAnnotation LoadSentiment(const fs::path& path, Scope scope,
                                         std::size_t expected_count) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::kMissingScores, path.string() + " not found");
  }
  return ParseSentiment(ReadJson(path), scope, expected_count, path.string());
}

}  // namespace exteval

#endif  // EXTEVAL_DATASET_H_
