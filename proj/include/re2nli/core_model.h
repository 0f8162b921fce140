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

// Domain types shared by the adaptation and evaluation pipeline.
//
// A relation-extraction (RE) instance names a head and a tail entity inside a
// text and, when labeled, the relation class linking them. Adaptation turns it
// into one premise/hypothesis pair per candidate class; a scorer then labels
// each pair entail / neutral / contradict.

#ifndef RE2NLI_CORE_MODEL_H_
#define RE2NLI_CORE_MODEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace re2nli {

// Half-open range of Unicode scalar values into the owning instance's text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct EntityMention {
  std::string surface;
  std::string entity_type;
  // Sorted ascending, non-overlapping. Document-level data may carry several.
  std::vector<Span> spans;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

struct RelationInstance {
  std::string id;
  std::string text;
  EntityMention head;
  EntityMention tail;
  std::optional<std::string> gold_label;
  std::string dataset;

  friend bool operator==(const RelationInstance&,
                         const RelationInstance&) = default;
};

enum class NliLabel { kEntail = 0, kNeutral = 1, kContradict = 2 };

std::string_view ToString(NliLabel label);
std::optional<NliLabel> NliLabelFromString(std::string_view text);

// Text with at most one `{subj}` and at most one `{obj}` placeholder.
struct HypothesisTemplate {
  std::string text;

  friend bool operator==(const HypothesisTemplate&,
                         const HypothesisTemplate&) = default;
};

inline constexpr std::string_view kSubjectPlaceholder = "{subj}";
inline constexpr std::string_view kObjectPlaceholder = "{obj}";

// Per-dataset contract. The constructor enforces every invariant and throws
// Error(kInvalidSchema) otherwise, so a live object is always consistent.
class DatasetSchema {
 public:
  DatasetSchema(std::string name, std::vector<std::string> classes,
                std::optional<std::string> negative_class,
                std::map<std::string, HypothesisTemplate> templates,
                std::vector<std::vector<std::string>> exclusivity_cliques,
                bool mask_entities);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const std::optional<std::string>& negative_class() const {
    return negative_class_;
  }
  const std::map<std::string, HypothesisTemplate>& templates() const {
    return templates_;
  }
  const std::vector<std::vector<std::string>>& exclusivity_cliques() const {
    return exclusivity_cliques_;
  }
  bool mask_entities() const { return mask_entities_; }

  // Throws Error(kUnknownClass) for classes outside the schema.
  const HypothesisTemplate& TemplateFor(std::string_view cls) const;
  std::optional<std::size_t> IndexOf(std::string_view cls) const;
  bool Contains(std::string_view cls) const { return IndexOf(cls).has_value(); }
  bool IsNegative(std::string_view cls) const {
    return negative_class_.has_value() && *negative_class_ == cls;
  }

  friend bool operator==(const DatasetSchema& a, const DatasetSchema& b) {
    return a.name_ == b.name_ && a.classes_ == b.classes_ &&
           a.negative_class_ == b.negative_class_ &&
           a.templates_ == b.templates_ &&
           a.exclusivity_cliques_ == b.exclusivity_cliques_ &&
           a.mask_entities_ == b.mask_entities_;
  }

 private:
  std::string name_;
  std::vector<std::string> classes_;
  std::optional<std::string> negative_class_;
  std::map<std::string, HypothesisTemplate> templates_;
  std::vector<std::vector<std::string>> exclusivity_cliques_;
  bool mask_entities_ = false;
  std::unordered_map<std::string, std::size_t> index_;
};

struct PremiseHypothesisPair {
  std::string pair_id;
  std::string instance_id;
  std::string premise;
  std::string hypothesis;
  std::string hypothesis_class;
  std::optional<NliLabel> target;
  std::string dataset;

  friend bool operator==(const PremiseHypothesisPair&,
                         const PremiseHypothesisPair&) = default;
};

inline constexpr std::string_view kPairIdSeparator = "::";

// instance_id + "::" + hypothesis_class.
std::string MakePairId(std::string_view instance_id,
                       std::string_view hypothesis_class);

struct Probabilities {
  double entail = 0.0;
  double neutral = 0.0;
  double contradict = 0.0;

  friend bool operator==(const Probabilities&, const Probabilities&) = default;
};

struct GeneratedText {
  std::string text;

  friend bool operator==(const GeneratedText&, const GeneratedText&) = default;
};

using PredictionPayload = std::variant<Probabilities, GeneratedText>;

struct PredictionRecord {
  std::string pair_id;
  PredictionPayload payload;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

inline constexpr double kProbabilitySumTolerance = 1e-6;

// Throws Error(kInvalidPrediction) unless every p is in [0, 1] and the triple
// sums to 1 within kProbabilitySumTolerance.
void ValidateProbabilities(const Probabilities& probs);

}  // namespace re2nli

#endif  // RE2NLI_CORE_MODEL_H_
