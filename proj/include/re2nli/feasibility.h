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

// Feasible-hypothesis filter.
//
// For every relation class the index records the (head type, tail type)
// pairs that class was observed with in training data. At adaptation time a
// hypothesis is only generated for classes whose set contains the
// instance's own type pair. Pairs are ordered: (A, B) and (B, A) differ.

#ifndef RE2NLI_FEASIBILITY_H_
#define RE2NLI_FEASIBILITY_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "re2nli/core_model.h"
#include "re2nli/ingest.h"
#include "re2nli/json_io.h"

namespace re2nli {

using TypePair = std::pair<std::string, std::string>;

class FeasibilityIndex {
 public:
  // One (initially empty) set per class, in the given order.
  explicit FeasibilityIndex(std::vector<std::string> classes);

  // Throws Error(kUnknownClass) for a class the index was not built with.
  void Add(std::string_view cls, TypePair types);
  const std::set<TypePair>& PairsFor(std::string_view cls) const;
  bool Allows(std::size_t class_index, std::string_view head_type,
              std::string_view tail_type) const;

  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  friend bool operator==(const FeasibilityIndex&,
                         const FeasibilityIndex&) = default;

 private:
  std::size_t IndexOf(std::string_view cls) const;

  std::vector<std::string> classes_;
  std::vector<std::set<TypePair>> pairs_;
};

// Every instance must be labeled (Error(kUnlabeledInstance) otherwise).
// Independent of instance order.
FeasibilityIndex BuildIndex(const DatasetSplit& train,
                            const DatasetSchema& schema);

// Classes whose observed set contains (head_type, tail_type), in the index's
// (schema) class order.
std::vector<std::string> FeasibleClasses(const FeasibilityIndex& index,
                                         std::string_view head_type,
                                         std::string_view tail_type);

// {"<class>": [[head_type, tail_type], ...], ...} with each array sorted.
Json ToJson(const FeasibilityIndex& index);
// Classes missing from the file get empty sets; classes outside `schema`
// raise Error(kUnknownClass).
FeasibilityIndex FeasibilityIndexFromJson(const Json& j,
                                          const DatasetSchema& schema);
void SaveIndex(const std::filesystem::path& path,
               const FeasibilityIndex& index);
FeasibilityIndex LoadIndex(const std::filesystem::path& path,
                           const DatasetSchema& schema);

}  // namespace re2nli

#endif  // RE2NLI_FEASIBILITY_H_
