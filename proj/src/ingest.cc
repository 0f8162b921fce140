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

#include "re2nli/ingest.h"

#include <algorithm>
#include <unordered_set>

#include "re2nli/error.h"
#include "re2nli/utf8.h"

namespace re2nli {
namespace {

void CheckMentionSpans(const RelationInstance& instance,
                       const EntityMention& mention, std::size_t text_length,
                       const char* role) {
  if (mention.spans.empty()) {
    throw Error(ErrorKind::kSpanOutOfBounds,
                "instance '" + instance.id + "': " + role + " has no spans");
  }
  for (std::size_t i = 0; i < mention.spans.size(); ++i) {
    const Span& s = mention.spans[i];
    if (s.start >= s.end || s.end > text_length) {
      throw Error(ErrorKind::kSpanOutOfBounds,
                  "instance '" + instance.id + "': " + role + " span [" +
                      std::to_string(s.start) + ", " + std::to_string(s.end) +
                      ") outside text of length " +
                      std::to_string(text_length));
    }
    if (i > 0 && mention.spans[i - 1].end > s.start) {
      throw Error(ErrorKind::kOverlappingSpans,
                  "instance '" + instance.id + "': " + role +
                      " spans must be sorted and non-overlapping");
    }
  }
}

bool Overlaps(const Span& a, const Span& b) {
  return a.start < b.end && b.start < a.end;
}

}  // namespace

std::string_view ToString(SplitName name) {
  switch (name) {
    case SplitName::kTrain: return "train";
    case SplitName::kDev: return "dev";
    case SplitName::kTest: return "test";
  }
  return "train";
}

std::optional<SplitName> SplitNameFromString(std::string_view text) {
  if (text == "train") return SplitName::kTrain;
  if (text == "dev") return SplitName::kDev;
  if (text == "test") return SplitName::kTest;
  return std::nullopt;
}

void ValidateInstance(const RelationInstance& instance,
                      const DatasetSchema& schema, bool allow_unlabeled) {
  if (instance.id.empty()) {
    throw Error(ErrorKind::kMalformedLine, "instance id is empty");
  }
  if (!utf8::IsValid(instance.text)) {
    throw Error(ErrorKind::kMalformedLine,
                "instance '" + instance.id + "': text is not valid UTF-8");
  }
  const std::size_t length = utf8::Length(instance.text);
  CheckMentionSpans(instance, instance.head, length, "head");
  CheckMentionSpans(instance, instance.tail, length, "tail");

  if (instance.head.spans == instance.tail.spans) {
    throw Error(ErrorKind::kSelfRelation,
                "instance '" + instance.id +
                    "': head and tail are the same mention");
  }
  for (const Span& h : instance.head.spans) {
    for (const Span& t : instance.tail.spans) {
      if (Overlaps(h, t)) {
        throw Error(ErrorKind::kOverlappingSpans,
                    "instance '" + instance.id +
                        "': head and tail spans overlap");
      }
    }
  }

  if (instance.gold_label) {
    if (!schema.Contains(*instance.gold_label)) {
      throw Error(ErrorKind::kUnknownLabel,
                  "instance '" + instance.id + "': label '" +
                      *instance.gold_label + "' is not a class of schema '" +
                      schema.name() + "'");
    }
  } else if (!allow_unlabeled) {
    throw Error(ErrorKind::kMissingLabel,
                "instance '" + instance.id +
                    "': gold_label is required outside test splits");
  }
}

DatasetSplit ParseSplit(std::istream& in, const DatasetSchema& schema,
                        SplitName name) {
  DatasetSplit split;
  split.name = name;
  std::unordered_set<std::string> seen;
  const bool allow_unlabeled = name == SplitName::kTest;
  ForEachJsonLine(in, [&](const Json& j, std::size_t line_no) {
    RelationInstance instance = RelationInstanceFromJson(j);
    try {
      ValidateInstance(instance, schema, allow_unlabeled);
    } catch (const Error& e) {
      // ForEachJsonLine already prefixes kMalformedLine.
      if (e.kind() == ErrorKind::kMalformedLine) throw;
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(instance.id).second) {
      throw Error(ErrorKind::kDuplicateId,
                  "line " + std::to_string(line_no) + ": duplicate id '" +
                      instance.id + "'");
    }
    split.instances.push_back(std::move(instance));
  });
  return split;
}

DatasetSplit LoadSplit(const std::filesystem::path& path,
                       const DatasetSchema& schema, SplitName name) {
  std::ifstream in = OpenForRead(path);
  return ParseSplit(in, schema, name);
}

void WriteSplit(std::ostream& out, const DatasetSplit& split) {
  for (const auto& instance : split.instances) {
    out << DumpLine(ToJson(instance)) << '\n';
  }
}

void SaveSplit(const std::filesystem::path& path, const DatasetSplit& split) {
  std::ofstream out = OpenForWrite(path);
  WriteSplit(out, split);
  if (!out) throw Error(ErrorKind::kIo, "write failed: '" + path.string() + "'");
}

StatsReport SplitStats(const DatasetSplit& split, const DatasetSchema& schema) {
  StatsReport report;
  std::vector<std::size_t> counts(schema.size(), 0);
  for (const auto& instance : split.instances) {
    ++report.total;
    ++report.per_type_pair[{instance.head.entity_type,
                            instance.tail.entity_type}];
    if (!instance.gold_label) {
      ++report.unlabeled;
      continue;
    }
    if (auto idx = schema.IndexOf(*instance.gold_label)) ++counts[*idx];
  }
  for (std::size_t i = 0; i < schema.size(); ++i) {
    report.per_class.emplace_back(schema.classes()[i], counts[i]);
  }
  return report;
}

Json ToJson(const StatsReport& report) {
  Json per_class = Json::object();
  for (const auto& [cls, n] : report.per_class) per_class[cls] = n;
  Json per_pair = Json::array();
  for (const auto& [types, n] : report.per_type_pair) {
    per_pair.push_back(Json{{"head_type", types.first},
                            {"tail_type", types.second},
                            {"count", n}});
  }
  Json j;
  j["total"] = report.total;
  j["unlabeled"] = report.unlabeled;
  j["per_class"] = std::move(per_class);
  j["per_type_pair"] = std::move(per_pair);
  return j;
}

}  // namespace re2nli
