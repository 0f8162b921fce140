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

#include "re2nli/core_model.h"

#include <cmath>
#include <set>
#include <utility>

#include "re2nli/error.h"

namespace re2nli {
namespace {

std::size_t CountOccurrences(std::string_view haystack,
                             std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

[[noreturn]] void SchemaError(const std::string& schema,
                              const std::string& what) {
  throw Error(ErrorKind::kInvalidSchema, "schema '" + schema + "': " + what);
}

}  // namespace

std::string_view ToString(NliLabel label) {
  switch (label) {
    case NliLabel::kEntail: return "entail";
    case NliLabel::kNeutral: return "neutral";
    case NliLabel::kContradict: return "contradict";
  }
  return "neutral";
}

std::optional<NliLabel> NliLabelFromString(std::string_view text) {
  if (text == "entail") return NliLabel::kEntail;
  if (text == "neutral") return NliLabel::kNeutral;
  if (text == "contradict") return NliLabel::kContradict;
  return std::nullopt;
}

DatasetSchema::DatasetSchema(
    std::string name, std::vector<std::string> classes,
    std::optional<std::string> negative_class,
    std::map<std::string, HypothesisTemplate> templates,
    std::vector<std::vector<std::string>> exclusivity_cliques,
    bool mask_entities)
    : name_(std::move(name)),
      classes_(std::move(classes)),
      negative_class_(std::move(negative_class)),
      templates_(std::move(templates)),
      exclusivity_cliques_(std::move(exclusivity_cliques)),
      mask_entities_(mask_entities) {
  if (classes_.empty()) SchemaError(name_, "class list is empty");
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].empty()) SchemaError(name_, "empty class id");
    if (!index_.emplace(classes_[i], i).second) {
      SchemaError(name_, "duplicate class '" + classes_[i] + "'");
    }
  }
  if (negative_class_ && !index_.contains(*negative_class_)) {
    SchemaError(name_, "negative class '" + *negative_class_ +
                           "' is not in the class list");
  }
  if (templates_.size() != classes_.size()) {
    SchemaError(name_, "expected exactly one template per class");
  }
  for (const auto& [cls, tpl] : templates_) {
    if (!index_.contains(cls)) {
      SchemaError(name_, "template for unknown class '" + cls + "'");
    }
    if (CountOccurrences(tpl.text, kSubjectPlaceholder) > 1 ||
        CountOccurrences(tpl.text, kObjectPlaceholder) > 1) {
      SchemaError(name_, "template for '" + cls +
                             "' repeats a placeholder");
    }
  }
  for (const auto& clique : exclusivity_cliques_) {
    if (clique.size() < 2) {
      SchemaError(name_, "exclusivity clique needs at least two members");
    }
    std::set<std::string_view> seen;
    for (const auto& cls : clique) {
      if (!index_.contains(cls)) {
        SchemaError(name_, "clique member '" + cls + "' is not a class");
      }
      if (IsNegative(cls)) {
        SchemaError(name_, "clique contains the negative class '" + cls + "'");
      }
      if (!seen.insert(cls).second) {
        SchemaError(name_, "clique repeats '" + cls + "'");
      }
    }
  }
}

const HypothesisTemplate& DatasetSchema::TemplateFor(
    std::string_view cls) const {
  auto it = templates_.find(std::string(cls));
  if (it == templates_.end()) {
    throw Error(ErrorKind::kUnknownClass,
                "class '" + std::string(cls) + "' is not in schema '" +
                    name_ + "'");
  }
  return it->second;
}

std::optional<std::size_t> DatasetSchema::IndexOf(std::string_view cls) const {
  auto it = index_.find(std::string(cls));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string MakePairId(std::string_view instance_id,
                       std::string_view hypothesis_class) {
  std::string id;
  id.reserve(instance_id.size() + kPairIdSeparator.size() +
             hypothesis_class.size());
  id.append(instance_id).append(kPairIdSeparator).append(hypothesis_class);
  return id;
}

void ValidateProbabilities(const Probabilities& probs) {
  for (double p : {probs.entail, probs.neutral, probs.contradict}) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw Error(ErrorKind::kInvalidPrediction,
                  "probability outside [0, 1]: " + std::to_string(p));
    }
  }
  const double sum = probs.entail + probs.neutral + probs.contradict;
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw Error(ErrorKind::kInvalidPrediction,
                "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

}  // namespace re2nli
