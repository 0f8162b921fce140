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

#ifndef RE2NLI_VERBALIZER_H_
#define RE2NLI_VERBALIZER_H_

#include <string>
#include <string_view>

#include "re2nli/core_model.h"

namespace re2nli {

// "@" + entity_type + "$"
std::string EntityMarker(std::string_view entity_type);

// With schema.mask_entities(), every head and tail span is replaced by the
// marker of its entity type; otherwise the text is returned unchanged.
// Only defined on raw instance text: feeding a premise back in would mask
// offsets that no longer line up.
std::string BuildPremise(const RelationInstance& instance,
                         const DatasetSchema& schema);

// Substitutes `{subj}` / `{obj}` with the head / tail marker in masked mode
// and with the surface forms otherwise.
std::string FillHypothesis(const HypothesisTemplate& hypothesis_template,
                           const RelationInstance& instance,
                           const DatasetSchema& schema);

}  // namespace re2nli

#endif  // RE2NLI_VERBALIZER_H_
