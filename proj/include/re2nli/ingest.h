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

// Loading and validation of canonical JSONL instance files.

#ifndef RE2NLI_INGEST_H_
#define RE2NLI_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "re2nli/core_model.h"
#include "re2nli/json_io.h"

namespace re2nli {

enum class SplitName { kTrain, kDev, kTest };

std::string_view ToString(SplitName name);
std::optional<SplitName> SplitNameFromString(std::string_view text);

struct DatasetSplit {
  SplitName name = SplitName::kTrain;
  std::vector<RelationInstance> instances;
};

// Checks one instance against the core invariants:
//   spans in bounds, sorted and non-overlapping within each entity;
//   head and tail disjoint (identical span sets are a self-relation);
//   gold label known to `schema`, or absent when `allow_unlabeled`.
void ValidateInstance(const RelationInstance& instance,
                      const DatasetSchema& schema, bool allow_unlabeled);

// Unlabeled instances are accepted only for SplitName::kTest.
DatasetSplit ParseSplit(std::istream& in, const DatasetSchema& schema,
                        SplitName name);
DatasetSplit LoadSplit(const std::filesystem::path& path,
                       const DatasetSchema& schema, SplitName name);

void WriteSplit(std::ostream& out, const DatasetSplit& split);
void SaveSplit(const std::filesystem::path& path, const DatasetSplit& split);

struct StatsReport {
  std::size_t total = 0;
  std::size_t unlabeled = 0;
  // Schema class order; classes with no instances report 0.
  std::vector<std::pair<std::string, std::size_t>> per_class;
  std::map<std::pair<std::string, std::string>, std::size_t> per_type_pair;
};

StatsReport SplitStats(const DatasetSplit& split, const DatasetSchema& schema);
Json ToJson(const StatsReport& report);

}  // namespace re2nli

#endif  // RE2NLI_INGEST_H_
