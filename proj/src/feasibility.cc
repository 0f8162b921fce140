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

#include "re2nli/feasibility.h"

#include <algorithm>

#include "re2nli/error.h"

namespace re2nli {

FeasibilityIndex::FeasibilityIndex(std::vector<std::string> classes)
    : classes_(std::move(classes)), pairs_(classes_.size()) {}

std::size_t FeasibilityIndex::IndexOf(std::string_view cls) const {
  auto it = std::find(classes_.begin(), classes_.end(), cls);
  if (it == classes_.end()) {
    throw Error(ErrorKind::kUnknownClass,
                "class '" + std::string(cls) + "' is not in the index");
  }
  return static_cast<std::size_t>(it - classes_.begin());
}

void FeasibilityIndex::Add(std::string_view cls, TypePair types) {
  pairs_[IndexOf(cls)].insert(std::move(types));
}

const std::set<TypePair>& FeasibilityIndex::PairsFor(
    std::string_view cls) const {
  return pairs_[IndexOf(cls)];
}

bool FeasibilityIndex::Allows(std::size_t class_index,
                              std::string_view head_type,
                              std::string_view tail_type) const {
  const auto& set = pairs_.at(class_index);
  // std::set<pair<string,string>> has no heterogeneous lookup.
  return set.contains(TypePair(head_type, tail_type));
}

FeasibilityIndex BuildIndex(const DatasetSplit& train,
                            const DatasetSchema& schema) {
  FeasibilityIndex index(schema.classes());
  for (const auto& instance : train.instances) {
    if (!instance.gold_label) {
      throw Error(ErrorKind::kUnlabeledInstance,
                  "instance '" + instance.id +
                      "' has no gold label; the index needs labeled data");
    }
    if (!schema.Contains(*instance.gold_label)) {
      throw Error(ErrorKind::kUnknownLabel,
                  "instance '" + instance.id + "': label '" +
                      *instance.gold_label + "' is not in the schema");
    }
    index.Add(*instance.gold_label,
              {instance.head.entity_type, instance.tail.entity_type});
  }
  return index;
}

std::vector<std::string> FeasibleClasses(const FeasibilityIndex& index,
                                         std::string_view head_type,
                                         std::string_view tail_type) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index.Allows(i, head_type, tail_type)) {
      out.push_back(index.classes()[i]);
    }
  }
  return out;
}

Json ToJson(const FeasibilityIndex& index) {
  // Keys sorted too, so the file is byte-stable whatever the class order.
  std::vector<std::size_t> order(index.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return index.classes()[a] < index.classes()[b];
  });
  Json j = Json::object();
  for (std::size_t i : order) {
    const std::string& cls = index.classes()[i];
    Json pairs = Json::array();
    for (const auto& [head, tail] : index.PairsFor(cls)) {
      pairs.push_back(Json::array({head, tail}));
    }
    j[cls] = std::move(pairs);
  }
  return j;
}

FeasibilityIndex FeasibilityIndexFromJson(const Json& j,
                                          const DatasetSchema& schema) {
  if (!j.is_object()) {
    throw Error(ErrorKind::kMalformedLine, "index file must be a JSON object");
  }
  FeasibilityIndex index(schema.classes());
  for (const auto& [cls, pairs] : j.items()) {
    if (!schema.Contains(cls)) {
      throw Error(ErrorKind::kUnknownClass,
                  "index class '" + cls + "' is not in schema '" +
                      schema.name() + "'");
    }
    if (!pairs.is_array()) {
      throw Error(ErrorKind::kMalformedLine,
                  "index entry for '" + cls + "' must be an array");
    }
    for (const Json& p : pairs) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
          !p[1].is_string()) {
        throw Error(ErrorKind::kMalformedLine,
                    "index entry for '" + cls +
                        "' must hold [head_type, tail_type] pairs");
      }
      index.Add(cls, {p[0].get<std::string>(), p[1].get<std::string>()});
    }
  }
  return index;
}

void SaveIndex(const std::filesystem::path& path,
               const FeasibilityIndex& index) {
  WriteJsonFile(path, ToJson(index));
}

FeasibilityIndex LoadIndex(const std::filesystem::path& path,
                           const DatasetSchema& schema) {
  return FeasibilityIndexFromJson(ReadJsonFile(path), schema);
}

}  // namespace re2nli
