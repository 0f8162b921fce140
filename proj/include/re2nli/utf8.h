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

#ifndef RE2NLI_UTF8_H_
#define RE2NLI_UTF8_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

// Entity spans count Unicode scalar values; strings are stored as UTF-8.
namespace re2nli::utf8 {

// Byte offset of every scalar-value boundary in `text`, including 0 and
// text.size(); the result has (scalar count + 1) entries. Returns nullopt if
// `text` is not well-formed UTF-8 (overlongs and surrogates are rejected).
std::optional<std::vector<std::size_t>> Boundaries(std::string_view text);

// Number of scalar values. `text` must be well-formed.
std::size_t Length(std::string_view text);

bool IsValid(std::string_view text);

}  // namespace re2nli::utf8

#endif  // RE2NLI_UTF8_H_
