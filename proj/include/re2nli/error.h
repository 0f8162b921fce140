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

#ifndef RE2NLI_ERROR_H_
#define RE2NLI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace re2nli {

// Every failure raised by the library carries one of these kinds. The CLI
// maps them onto exit codes (see ExitCodeFor).
enum class ErrorKind {
  kUsage,
  kMalformedLine,
  kSpanOutOfBounds,
  kOverlappingSpans,
  kSelfRelation,
  kUnknownLabel,
  kMissingLabel,
  kDuplicateId,
  kInvalidSchema,
  kInvalidMatrix,
  kUnlabeledInstance,
  kUnknownClass,
  kInvalidPrediction,
  kMixedInstanceIds,
  kMixedPayloads,
  kEmptyGroup,
  kUnknownInstanceId,
  kDuplicatePairId,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// 1 usage, 2 validation, 3 I/O.
int ExitCodeFor(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace re2nli

#endif  // RE2NLI_ERROR_H_
