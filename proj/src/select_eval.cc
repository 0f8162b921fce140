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

#include "re2nli/select_eval.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "re2nli/error.h"

namespace re2nli {
namespace {

char Lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::size_t FindIgnoreCase(std::string_view haystack, std::string_view needle) {
  auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end(),
                        [](char a, char b) { return Lower(a) == Lower(b); });
  return it == haystack.end()
             ? std::string_view::npos
             : static_cast<std::size_t>(it - haystack.begin());
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string_view ToString(ParsedLabel label) {
  switch (label) {
    case ParsedLabel::kEntail: return "entail";
    case ParsedLabel::kNeutral: return "neutral";
    case ParsedLabel::kContradict: return "contradict";
    case ParsedLabel::kNone: return "none";
  }
  return "none";
}

ParsedLabel ParseNliLabel(std::string_view text) {
  struct Cue {
    std::string_view prefix;
    ParsedLabel label;
  };
  static constexpr Cue kCues[] = {{"ent", ParsedLabel::kEntail},
                                  {"con", ParsedLabel::kContradict},
                                  {"neu", ParsedLabel::kNeutral}};
  ParsedLabel best = ParsedLabel::kNone;
  std::size_t best_pos = std::string_view::npos;
  for (const Cue& cue : kCues) {
    const std::size_t pos = FindIgnoreCase(text, cue.prefix);
    if (pos < best_pos) {
      best_pos = pos;
      best = cue.label;
    }
  }
  return best;
}

NliLabel PredictedLabel(const PredictionRecord& record) {
  if (const auto* p = std::get_if<Probabilities>(&record.payload)) {
    if (p->entail >= p->neutral && p->entail >= p->contradict) {
      return NliLabel::kEntail;
    }
    return p->neutral >= p->contradict ? NliLabel::kNeutral
                                       : NliLabel::kContradict;
  }
  switch (ParseNliLabel(std::get<GeneratedText>(record.payload).text)) {
    case ParsedLabel::kEntail: return NliLabel::kEntail;
    case ParsedLabel::kContradict: return NliLabel::kContradict;
    case ParsedLabel::kNeutral:
    case ParsedLabel::kNone: return NliLabel::kNeutral;
  }
  return NliLabel::kNeutral;
}

PairKey SplitPairId(std::string_view pair_id, const DatasetSchema& schema) {
  const std::string* best = nullptr;
  for (const auto& cls : schema.classes()) {
    const std::size_t suffix = kPairIdSeparator.size() + cls.size();
    if (pair_id.size() <= suffix) continue;
    if (pair_id.substr(pair_id.size() - cls.size()) != cls) continue;
    if (pair_id.substr(pair_id.size() - suffix, kPairIdSeparator.size()) !=
        kPairIdSeparator) {
      continue;
    }
    if (!best || cls.size() > best->size()) best = &cls;
  }
  if (!best) {
    throw Error(ErrorKind::kUnknownClass,
                "pair id '" + std::string(pair_id) +
                    "' does not end in '::<class>' for schema '" +
                    schema.name() + "'");
  }
  const std::size_t cut = pair_id.size() - best->size() - kPairIdSeparator.size();
  return {std::string(pair_id.substr(0, cut)), *best};
}

SelectionResult SelectGroup(std::span<const PredictionRecord> predictions,
                            const DatasetSchema& schema, bool grouped) {
  if (predictions.empty()) {
    throw Error(ErrorKind::kEmptyGroup, "cannot select from an empty group");
  }
  SelectionResult result;
  const bool text_payload =
      std::holds_alternative<GeneratedText>(predictions.front().payload);

  struct Candidate {
    std::size_t class_index;
    double confidence;
  };
  std::vector<Candidate> entailed;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const PredictionRecord& record = predictions[i];
    PairKey key = SplitPairId(record.pair_id, schema);
    if (i == 0) {
      result.instance_id = key.instance_id;
    } else if (key.instance_id != result.instance_id) {
      throw Error(ErrorKind::kMixedInstanceIds,
                  "group mixes instances '" + result.instance_id + "' and '" +
                      key.instance_id + "'");
    }
    if (std::holds_alternative<GeneratedText>(record.payload) != text_payload) {
      throw Error(ErrorKind::kMixedPayloads,
                  "instance '" + result.instance_id +
                      "' mixes probability and text predictions");
    }
    if (PredictedLabel(record) != NliLabel::kEntail) continue;
    const double confidence =
        text_payload ? 0.0 : std::get<Probabilities>(record.payload).entail;
    entailed.push_back({*schema.IndexOf(key.hypothesis_class), confidence});
  }

  std::sort(entailed.begin(), entailed.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.class_index < b.class_index;
            });
  if (!grouped) {
    std::vector<std::string> classes;
    for (const Candidate& c : entailed) {
      const std::string& cls = schema.classes()[c.class_index];
      if (classes.empty() || classes.back() != cls) classes.push_back(cls);
    }
    result.predicted = std::move(classes);
    return result;
  }
  if (entailed.empty()) {
    result.predicted = Abstain{};
    return result;
  }
  // Strictly greater, so the lowest class index keeps exact ties.
  const Candidate* best = &entailed.front();
  for (const Candidate& c : entailed) {
    if (c.confidence > best->confidence) best = &c;
  }
  result.predicted = schema.classes()[best->class_index];
  return result;
}

std::vector<SelectionResult> SelectAll(
    std::span<const PredictionRecord> predictions, const DatasetSchema& schema,
    bool grouped) {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<PredictionRecord>> groups;
  for (const auto& record : predictions) {
    PairKey key = SplitPairId(record.pair_id, schema);
    auto [it, inserted] = groups.try_emplace(key.instance_id);
    if (inserted) order.push_back(key.instance_id);
    it->second.push_back(record);
  }
  std::vector<SelectionResult> results;
  results.reserve(order.size());
  for (const auto& id : order) {
    results.push_back(SelectGroup(groups.at(id), schema, grouped));
  }
  return results;
}

std::vector<RePrediction> BackMap(std::span<const SelectionResult> selections,
                                  const DatasetSchema& schema) {
  std::vector<RePrediction> out;
  out.reserve(selections.size());
  for (const auto& selection : selections) {
    RePrediction p;
    p.instance_id = selection.instance_id;
    if (const auto* cls = std::get_if<std::string>(&selection.predicted)) {
      p.classes.push_back(*cls);
    } else if (const auto* list =
                   std::get_if<std::vector<std::string>>(&selection.predicted)) {
      p.classes = *list;
    }
    if (p.classes.empty()) {
      p.abstained = true;
      if (schema.negative_class()) p.classes.push_back(*schema.negative_class());
    }
    out.push_back(std::move(p));
  }
  return out;
}

double ClassCounts::precision() const { return Ratio(tp, tp + fp); }
double ClassCounts::recall() const { return Ratio(tp, tp + fn); }
double ClassCounts::f1() const { return F1Score(precision(), recall()); }

ClassCounts& ClassCounts::operator+=(const ClassCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

double F1Score(double precision, double recall) {
  const double denom = precision + recall;
  return denom == 0.0 ? 0.0 : 2.0 * precision * recall / denom;
}

EvalReport Evaluate(std::span<const RePrediction> predicted,
                    const DatasetSplit& gold, const DatasetSchema& schema,
                    bool include_negative) {
  std::unordered_map<std::string_view, const RelationInstance*> gold_by_id;
  for (const auto& instance : gold.instances) {
    gold_by_id.emplace(instance.id, &instance);
  }
  std::unordered_map<std::string_view, const RePrediction*> pred_by_id;
  for (const auto& p : predicted) {
    if (!gold_by_id.contains(p.instance_id)) {
      throw Error(ErrorKind::kUnknownInstanceId,
                  "prediction for unknown instance '" + p.instance_id + "'");
    }
    if (!pred_by_id.emplace(p.instance_id, &p).second) {
      throw Error(ErrorKind::kDuplicateId,
                  "more than one prediction for instance '" + p.instance_id +
                      "'");
    }
  }

  auto scored = [&](std::string_view cls) {
    return include_negative || !schema.IsNegative(cls);
  };
  std::vector<ClassCounts> counts(schema.size());
  EvalReport report;
  report.include_negative = include_negative;
  for (const auto& instance : gold.instances) {
    if (!instance.gold_label) {
      throw Error(ErrorKind::kUnlabeledInstance,
                  "gold instance '" + instance.id + "' has no label");
    }
    ++report.instance_count;
    const std::string& g = *instance.gold_label;
    const auto gold_index = schema.IndexOf(g);
    if (!gold_index) {
      throw Error(ErrorKind::kUnknownLabel,
                  "gold instance '" + instance.id + "': label '" + g +
                      "' is not in the schema");
    }
    const std::size_t gi = *gold_index;

    std::vector<std::string> classes;
    auto it = pred_by_id.find(instance.id);
    if (it == pred_by_id.end() || it->second->abstained) {
      ++report.abstention_count;
      // A missing prediction is an abstention; map it like BackMap would.
      if (it == pred_by_id.end() && schema.negative_class()) {
        classes.push_back(*schema.negative_class());
      }
    }
    if (it != pred_by_id.end()) classes = it->second->classes;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    bool hit = false;
    for (const auto& cls : classes) {
      auto ci = schema.IndexOf(cls);
      if (!ci) {
        throw Error(ErrorKind::kUnknownClass,
                    "instance '" + instance.id + "': predicted class '" + cls +
                        "' is not in the schema");
      }
      if (!scored(cls)) continue;
      if (cls == g) {
        hit = true;
        ++counts[*ci].tp;
      } else {
        ++counts[*ci].fp;
      }
    }
    if (scored(g) && !hit) ++counts[gi].fn;
  }

  ClassCounts total;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const std::string& cls = schema.classes()[i];
    if (!scored(cls)) continue;
    report.per_class.emplace_back(cls, counts[i]);
    total += counts[i];
  }
  report.tp = total.tp;
  report.fp = total.fp;
  report.fn = total.fn;
  report.micro_precision = total.precision();
  report.micro_recall = total.recall();
  report.micro_f1 = total.f1();
  return report;
}

Json ToJson(const EvalReport& report) {
  Json per_class = Json::object();
  for (const auto& [cls, c] : report.per_class) {
    per_class[cls] = Json{{"tp", c.tp},
                          {"fp", c.fp},
                          {"fn", c.fn},
                          {"precision", c.precision()},
                          {"recall", c.recall()},
                          {"f1", c.f1()}};
  }
  Json j;
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["micro_precision"] = report.micro_precision;
  j["micro_recall"] = report.micro_recall;
  j["micro_f1"] = report.micro_f1;
  j["per_class"] = std::move(per_class);
  j["abstention_count"] = report.abstention_count;
  j["instance_count"] = report.instance_count;
  j["include_negative"] = report.include_negative;
  return j;
}

std::vector<PredictionRecord> ReadPredictions(std::istream& in) {
  std::vector<PredictionRecord> records;
  std::unordered_set<std::string> seen;
  ForEachJsonLine(in, [&](const Json& j, std::size_t line_no) {
    PredictionRecord record;
    try {
      record = PredictionRecordFromJson(j);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kMalformedLine) throw;
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(record.pair_id).second) {
      throw Error(ErrorKind::kDuplicatePairId,
                  "line " + std::to_string(line_no) + ": duplicate pair id '" +
                      record.pair_id + "'");
    }
    records.push_back(std::move(record));
  });
  return records;
}

std::vector<PredictionRecord> LoadPredictions(
    const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  return ReadPredictions(in);
}

void WritePredictions(std::ostream& out,
                      std::span<const PredictionRecord> records) {
  for (const auto& r : records) out << DumpLine(ToJson(r)) << '\n';
}

Json ToJson(const RePrediction& prediction) {
  Json j;
  j["instance_id"] = prediction.instance_id;
  j["predicted"] = prediction.classes;
  j["abstained"] = prediction.abstained;
  return j;
}

RePrediction RePredictionFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("instance_id") ||
      !j["instance_id"].is_string() || !j.contains("predicted") ||
      !j["predicted"].is_array()) {
    throw Error(ErrorKind::kMalformedLine,
                "RE prediction needs 'instance_id' and 'predicted'");
  }
  RePrediction p;
  p.instance_id = j["instance_id"].get<std::string>();
  for (const Json& c : j["predicted"]) {
    if (!c.is_string()) {
      throw Error(ErrorKind::kMalformedLine, "'predicted' must hold strings");
    }
    p.classes.push_back(c.get<std::string>());
  }
  if (j.contains("abstained")) {
    if (!j["abstained"].is_boolean()) {
      throw Error(ErrorKind::kMalformedLine, "'abstained' must be boolean");
    }
    p.abstained = j["abstained"].get<bool>();
  }
  return p;
}

void WriteRePredictions(std::ostream& out,
                        std::span<const RePrediction> predictions) {
  for (const auto& p : predictions) out << DumpLine(ToJson(p)) << '\n';
}

std::vector<RePrediction> ReadRePredictions(std::istream& in) {
  std::vector<RePrediction> out;
  ForEachJsonLine(in, [&](const Json& j, std::size_t) {
    out.push_back(RePredictionFromJson(j));
  });
  return out;
}

}  // namespace re2nli
