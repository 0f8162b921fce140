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

#ifndef RE2NLI_TESTS_SUPPORT_TEST_UTIL_H_
#define RE2NLI_TESTS_SUPPORT_TEST_UTIL_H_

#include <functional>
#include <optional>

#include "re2nli/error.h"

namespace re2nli::testing {

// Kind of the Error thrown by fn, or nullopt if nothing was thrown.
inline std::optional<ErrorKind> ThrownKind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace re2nli::testing

#endif  // RE2NLI_TESTS_SUPPORT_TEST_UTIL_H_
