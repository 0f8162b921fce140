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

#include "re2nli/error.h"

namespace re2nli {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "Usage";
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kSpanOutOfBounds: return "SpanOutOfBounds";
    case ErrorKind::kOverlappingSpans: return "OverlappingSpans";
    case ErrorKind::kSelfRelation: return "SelfRelation";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kMissingLabel: return "MissingLabel";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kInvalidSchema: return "InvalidSchema";
    case ErrorKind::kInvalidMatrix: return "InvalidMatrix";
    case ErrorKind::kUnlabeledInstance: return "UnlabeledInstance";
    case ErrorKind::kUnknownClass: return "UnknownClass";
    case ErrorKind::kInvalidPrediction: return "InvalidPrediction";
    case ErrorKind::kMixedInstanceIds: return "MixedInstanceIds";
    case ErrorKind::kMixedPayloads: return "MixedPayloads";
    case ErrorKind::kEmptyGroup: return "EmptyGroup";
    case ErrorKind::kUnknownInstanceId: return "UnknownInstanceId";
    case ErrorKind::kDuplicatePairId: return "DuplicatePairId";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return 1;
    case ErrorKind::kIo: return 3;
    default: return 2;
  }
}

}  // namespace re2nli
