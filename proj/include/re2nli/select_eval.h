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

// From pair-level NLI predictions back to RE labels, and micro-F1 scoring.
//
// Pipeline: prediction records are grouped by instance (the pair id prefix),
// each group yields a selection (one class, a list of classes, or an
// abstention), selections are back-mapped to RE predictions, and those are
// scored against the gold split.

#ifndef RE2NLI_SELECT_EVAL_H_
#define RE2NLI_SELECT_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "re2nli/core_model.h"
#include "re2nli/ingest.h"
#include "re2nli/json_io.h"

namespace re2nli {

enum class ParsedLabel { kEntail, kNeutral, kContradict, kNone };

std::string_view ToString(ParsedLabel label);

// Case-insensitive search for "ent", "con" and "neu"; whichever occurs
// earliest in the text decides. No match gives kNone.
ParsedLabel ParseNliLabel(std::string_view text);

// The label a record votes for: argmax of the probabilities (ties resolve
// in the order entail, neutral, contradict) or the parsed text, with kNone
// read as neutral.
NliLabel PredictedLabel(const PredictionRecord& record);

struct PairKey {
  std::string instance_id;
  std::string hypothesis_class;
};

// Splits "<instance_id>::<class>" using the schema's class list (the longest
// matching class suffix wins, so ids may themselves contain "::").
// Error(kUnknownClass) if no class matches.
PairKey SplitPairId(std::string_view pair_id, const DatasetSchema& schema);

struct Abstain {
  friend bool operator==(const Abstain&, const Abstain&) = default;
};

struct SelectionResult {
  std::string instance_id;
  // One class (grouped), every entailed class (ungrouped), or abstention.
  std::variant<std::string, std::vector<std::string>, Abstain> predicted;

  friend bool operator==(const SelectionResult&,
                         const SelectionResult&) = default;
};

// grouped: the entailed record with the highest p_entail; exact ties and
// text payloads (which carry no confidence) resolve to the lowest schema
// class index. No entailed record gives Abstain.
// ungrouped: all entailed classes in schema order, possibly empty.
// Errors: kEmptyGroup, kMixedInstanceIds, kMixedPayloads.
SelectionResult SelectGroup(std::span<const PredictionRecord> predictions,
                            const DatasetSchema& schema, bool grouped);

// Partitions `predictions` by instance and selects each group. Results are
// in order of each instance's first appearance.
std::vector<SelectionResult> SelectAll(
    std::span<const PredictionRecord> predictions, const DatasetSchema& schema,
    bool grouped);

struct RePrediction {
  std::string instance_id;
  // Empty when the instance abstained and the schema has no negative class.
  std::vector<std::string> classes;
  bool abstained = false;

  friend bool operator==(const RePrediction&, const RePrediction&) = default;
};

// Abstentions (and empty ungrouped lists) become the negative class when the
// schema has one, else no prediction.
std::vector<RePrediction> BackMap(std::span<const SelectionResult> selections,
                                  const DatasetSchema& schema);

struct ClassCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  double precision() const;
  double recall() const;
  double f1() const;

  ClassCounts& operator+=(const ClassCounts& other);
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

// 2PR / (P + R), with 0/0 read as 0 at every step.
double F1Score(double precision, double recall);

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  // Scored classes in schema order.
  std::vector<std::pair<std::string, ClassCounts>> per_class;
  std::size_t abstention_count = 0;
  std::size_t instance_count = 0;
  bool include_negative = false;
};

// Micro-averaged scores over the positive classes (all classes with
// `include_negative`). For each gold instance with gold class g and
// predicted class set P, restricted to scored classes:
//   TP += [g scored and g in P];  FP += |P \ {g}|;  FN += [g scored, g not in P].
// Gold instances with no prediction count as abstentions.
// Errors: kUnknownInstanceId, kDuplicateId, kUnlabeledInstance.
EvalReport Evaluate(std::span<const RePrediction> predicted,
                    const DatasetSplit& gold, const DatasetSchema& schema,
                    bool include_negative = false);

Json ToJson(const EvalReport& report);

std::vector<PredictionRecord> ReadPredictions(std::istream& in);
std::vector<PredictionRecord> LoadPredictions(
    const std::filesystem::path& path);
void WritePredictions(std::ostream& out,
                      std::span<const PredictionRecord> records);

// {"instance_id": ..., "predicted": [...], "abstained": bool}
Json ToJson(const RePrediction& prediction);
RePrediction RePredictionFromJson(const Json& j);
void WriteRePredictions(std::ostream& out,
                        std::span<const RePrediction> predictions);
std::vector<RePrediction> ReadRePredictions(std::istream& in);

}  // namespace re2nli

#endif  // RE2NLI_SELECT_EVAL_H_
