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

// JSON encoding of the core types and small JSONL/file helpers.
//
// Field names and order are part of the file contracts; ordered_json keeps
// the emitted key order equal to insertion order so output is byte-stable.

#ifndef RE2NLI_JSON_IO_H_
#define RE2NLI_JSON_IO_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <string>

#include "json.hpp"
#include "re2nli/core_model.h"

namespace re2nli {

using Json = nlohmann::ordered_json;

// Decoders throw Error(kMalformedLine) on missing or mistyped fields; callers
// that know the line number rethrow with it attached.
Json ToJson(const EntityMention& mention);
EntityMention EntityMentionFromJson(const Json& j);

Json ToJson(const RelationInstance& instance);
RelationInstance RelationInstanceFromJson(const Json& j);

Json ToJson(const DatasetSchema& schema);
// Schema invariant violations surface as Error(kInvalidSchema).
DatasetSchema DatasetSchemaFromJson(const Json& j);

Json ToJson(const PremiseHypothesisPair& pair);
PremiseHypothesisPair PremiseHypothesisPairFromJson(const Json& j);

Json ToJson(const PredictionRecord& record);
// Also validates probability payloads (Error(kInvalidPrediction)).
PredictionRecord PredictionRecordFromJson(const Json& j);

// Calls `fn(json, line_no)` for each non-blank line (1-based numbering).
// Unparseable lines raise Error(kMalformedLine) naming the line.
void ForEachJsonLine(std::istream& in,
                     const std::function<void(const Json&, std::size_t)>& fn);

// Compact single-line dump. Throws Error(kMalformedLine) for non-UTF-8
// strings rather than letting the JSON library abort mid-write.
std::string DumpLine(const Json& j);

// File helpers raising Error(kIo).
std::ifstream OpenForRead(const std::filesystem::path& path);
std::ofstream OpenForWrite(const std::filesystem::path& path);
Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const Json& j);

}  // namespace re2nli

#endif  // RE2NLI_JSON_IO_H_
