// Copyright 2026 The re2nli Authors
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

#include "re2nli/json_io.h"

#include <utility>

#include "re2nli/error.h"

namespace re2nli {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorKind::kMalformedLine, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) Malformed(std::string("missing field '") + key + "'");
  return *it;
}

std::string StringField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_string()) {
    Malformed(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

// Absent and null both decode to nullopt.
std::optional<std::string> OptionalStringField(const Json& j,
                                               const char* key) {
  if (!j.is_object()) Malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    Malformed(std::string("field '") + key + "' must be a string or null");
  }
  return it->get<std::string>();
}

std::vector<std::string> StringArray(const Json& v, const char* what) {
  if (!v.is_array()) Malformed(std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    if (!e.is_string()) {
      Malformed(std::string(what) + " must contain only strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json ToJson(const EntityMention& mention) {
  Json spans = Json::array();
  for (const Span& s : mention.spans) spans.push_back(Json::array({s.start, s.end}));
  return Json{{"surface", mention.surface},
              {"type", mention.entity_type},
              {"spans", std::move(spans)}};
}

EntityMention EntityMentionFromJson(const Json& j) {
  EntityMention m;
  m.surface = StringField(j, "surface");
  m.entity_type = StringField(j, "type");
  const Json& spans = Field(j, "spans");
  if (!spans.is_array()) Malformed("field 'spans' must be an array");
  for (const Json& s : spans) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
        !s[1].is_number_unsigned()) {
      Malformed("each span must be a [start, end] pair of non-negative "
                "integers");
    }
    m.spans.push_back(
        {s[0].get<std::size_t>(), s[1].get<std::size_t>()});
  }
  return m;
}

Json ToJson(const RelationInstance& instance) {
  Json j;
  j["id"] = instance.id;
  j["text"] = instance.text;
  j["head"] = ToJson(instance.head);
  j["tail"] = ToJson(instance.tail);
  j["gold_label"] = instance.gold_label ? Json(*instance.gold_label) : Json();
  j["dataset"] = instance.dataset;
  return j;
}

RelationInstance RelationInstanceFromJson(const Json& j) {
  RelationInstance r;
  r.id = StringField(j, "id");
  r.text = StringField(j, "text");
  r.head = EntityMentionFromJson(Field(j, "head"));
  r.tail = EntityMentionFromJson(Field(j, "tail"));
  r.gold_label = OptionalStringField(j, "gold_label");
  r.dataset = StringField(j, "dataset");
  return r;
}

Json ToJson(const DatasetSchema& schema) {
  Json templates = Json::object();
  // Class order, not map order, so packs diff cleanly against the source.
  for (const auto& cls : schema.classes()) {
    templates[cls] = schema.TemplateFor(cls).text;
  }
  Json j;
  j["name"] = schema.name();
  j["classes"] = schema.classes();
  j["negative_class"] =
      schema.negative_class() ? Json(*schema.negative_class()) : Json();
  j["templates"] = std::move(templates);
  j["exclusivity_cliques"] = schema.exclusivity_cliques();
  j["mask_entities"] = schema.mask_entities();
  return j;
}

DatasetSchema DatasetSchemaFromJson(const Json& j) {
  try {
    std::string name = StringField(j, "name");
    std::vector<std::string> classes = StringArray(Field(j, "classes"),
                                                   "classes");
    std::optional<std::string> negative =
        OptionalStringField(j, "negative_class");
    const Json& tj = Field(j, "templates");
    if (!tj.is_object()) Malformed("field 'templates' must be an object");
    std::map<std::string, HypothesisTemplate> templates;
    for (const auto& [cls, text] : tj.items()) {
      if (!text.is_string()) Malformed("template texts must be strings");
      templates.emplace(cls, HypothesisTemplate{text.get<std::string>()});
    }
    const Json& cj = Field(j, "exclusivity_cliques");
    if (!cj.is_array()) {
      Malformed("field 'exclusivity_cliques' must be an array");
    }
    std::vector<std::vector<std::string>> cliques;
    for (const Json& c : cj) cliques.push_back(StringArray(c, "clique"));
    const Json& mask = Field(j, "mask_entities");
    if (!mask.is_boolean()) Malformed("field 'mask_entities' must be boolean");
    return DatasetSchema(std::move(name), std::move(classes),
                         std::move(negative), std::move(templates),
                         std::move(cliques), mask.get<bool>());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kMalformedLine) {
      throw Error(ErrorKind::kInvalidSchema, e.what());
    }
    throw;
  }
}

Json ToJson(const PremiseHypothesisPair& pair) {
  Json j;
  j["pair_id"] = pair.pair_id;
  j["instance_id"] = pair.instance_id;
  j["premise"] = pair.premise;
  j["hypothesis"] = pair.hypothesis;
  j["hypothesis_class"] = pair.hypothesis_class;
  j["target"] = pair.target ? Json(ToString(*pair.target)) : Json();
  j["dataset"] = pair.dataset;
  return j;
}

PremiseHypothesisPair PremiseHypothesisPairFromJson(const Json& j) {
  PremiseHypothesisPair p;
  p.pair_id = StringField(j, "pair_id");
  p.instance_id = StringField(j, "instance_id");
  p.premise = StringField(j, "premise");
  p.hypothesis = StringField(j, "hypothesis");
  p.hypothesis_class = StringField(j, "hypothesis_class");
  if (auto target = OptionalStringField(j, "target")) {
    p.target = NliLabelFromString(*target);
    if (!p.target) Malformed("unknown NLI target '" + *target + "'");
  }
  p.dataset = StringField(j, "dataset");
  if (p.pair_id != MakePairId(p.instance_id, p.hypothesis_class)) {
    Malformed("pair_id '" + p.pair_id +
              "' is not instance_id::hypothesis_class");
  }
  return p;
}

Json ToJson(const PredictionRecord& record) {
  Json j;
  j["pair_id"] = record.pair_id;
  if (const auto* probs = std::get_if<Probabilities>(&record.payload)) {
    j["probs"] = Json::array({probs->entail, probs->neutral, probs->contradict});
  } else {
    j["generated"] = std::get<GeneratedText>(record.payload).text;
  }
  return j;
}

PredictionRecord PredictionRecordFromJson(const Json& j) {
  PredictionRecord r;
  r.pair_id = StringField(j, "pair_id");
  const bool has_probs = j.contains("probs");
  const bool has_text = j.contains("generated");
  if (has_probs == has_text) {
    throw Error(ErrorKind::kInvalidPrediction,
                "prediction '" + r.pair_id +
                    "' needs exactly one of 'probs' or 'generated'");
  }
  if (has_probs) {
    const Json& p = j.at("probs");
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
        !p[1].is_number() || !p[2].is_number()) {
      throw Error(ErrorKind::kInvalidPrediction,
                  "prediction '" + r.pair_id +
                      "': 'probs' must be [p_entail, p_neutral, "
                      "p_contradict]");
    }
    Probabilities probs{p[0].get<double>(), p[1].get<double>(),
                        p[2].get<double>()};
    try {
      ValidateProbabilities(probs);
    } catch (const Error& e) {
      throw Error(e.kind(), "prediction '" + r.pair_id + "': " + e.what());
    }
    r.payload = probs;
  } else {
    r.payload = GeneratedText{StringField(j, "generated")};
  }
  return r;
}

void ForEachJsonLine(std::istream& in,
                     const std::function<void(const Json&, std::size_t)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::kMalformedLine,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      fn(j, line_no);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kMalformedLine) {
        throw Error(e.kind(),
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
      throw;
    }
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read failure");
}

std::string DumpLine(const Json& j) {
  try {
    return j.dump();
  } catch (const Json::type_error& e) {
    throw Error(ErrorKind::kMalformedLine, e.what());
  }
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  }
  return out;
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kMalformedLine,
                "'" + path.string() + "': " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  std::ofstream out = OpenForWrite(path);
  std::string text;
  try {
    text = j.dump(2);
  } catch (const Json::type_error& e) {
    throw Error(ErrorKind::kMalformedLine, e.what());
  }
  out << text << '\n';
  if (!out) throw Error(ErrorKind::kIo, "write failed: '" + path.string() + "'");
}

}  // namespace re2nli
