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

#include "re2nli/verbalizer.h"

#include <algorithm>
#include <vector>

#include "re2nli/error.h"
#include "re2nli/utf8.h"

namespace re2nli {
namespace {

struct Replacement {
  Span span;
  const std::string* marker;
};

}  // namespace

std::string EntityMarker(std::string_view entity_type) {
  std::string marker;
  marker.reserve(entity_type.size() + 2);
  marker.push_back('@');
  marker.append(entity_type);
  marker.push_back('$');
  return marker;
}

std::string BuildPremise(const RelationInstance& instance,
                         const DatasetSchema& schema) {
  if (!schema.mask_entities()) return instance.text;

  const auto bounds = utf8::Boundaries(instance.text);
  if (!bounds) {
    throw Error(ErrorKind::kMalformedLine,
                "instance '" + instance.id + "': text is not valid UTF-8");
  }
  const std::size_t length = bounds->size() - 1;

  const std::string head_marker = EntityMarker(instance.head.entity_type);
  const std::string tail_marker = EntityMarker(instance.tail.entity_type);
  std::vector<Replacement> edits;
  edits.reserve(instance.head.spans.size() + instance.tail.spans.size());
  for (const Span& s : instance.head.spans) edits.push_back({s, &head_marker});
  for (const Span& s : instance.tail.spans) edits.push_back({s, &tail_marker});

  std::sort(edits.begin(), edits.end(),
            [](const Replacement& a, const Replacement& b) {
              return a.span.start > b.span.start;
            });
  for (std::size_t i = 0; i < edits.size(); ++i) {
    const Span& s = edits[i].span;
    if (s.start >= s.end || s.end > length) {
      throw Error(ErrorKind::kSpanOutOfBounds,
                  "instance '" + instance.id + "': span out of bounds");
    }
    if (i > 0 && s.end > edits[i - 1].span.start) {
      throw Error(ErrorKind::kOverlappingSpans,
                  "instance '" + instance.id + "': entity spans overlap");
    }
  }

  // Right to left, so earlier byte offsets stay valid.
  std::string premise = instance.text;
  for (const Replacement& edit : edits) {
    const std::size_t begin = (*bounds)[edit.span.start];
    const std::size_t end = (*bounds)[edit.span.end];
    premise.replace(begin, end - begin, *edit.marker);
  }
  return premise;
}

std::string FillHypothesis(const HypothesisTemplate& hypothesis_template,
                           const RelationInstance& instance,
                           const DatasetSchema& schema) {
  std::string subject;
  std::string object;
  if (schema.mask_entities()) {
    subject = EntityMarker(instance.head.entity_type);
    object = EntityMarker(instance.tail.entity_type);
  } else {
    subject = instance.head.surface;
    object = instance.tail.surface;
  }
  // Positions are taken from the template, then replaced right to left, so a
  // surface form containing "{obj}" is never rewritten.
  std::string out = hypothesis_template.text;
  struct Slot {
    std::size_t pos;
    std::string_view placeholder;
    const std::string* value;
  };
  std::vector<Slot> slots;
  if (auto pos = out.find(kSubjectPlaceholder); pos != std::string::npos) {
    slots.push_back({pos, kSubjectPlaceholder, &subject});
  }
  if (auto pos = out.find(kObjectPlaceholder); pos != std::string::npos) {
    slots.push_back({pos, kObjectPlaceholder, &object});
  }
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.pos > b.pos; });
  for (const Slot& slot : slots) {
    out.replace(slot.pos, slot.placeholder.size(), *slot.value);
  }
  return out;
}

}  // namespace re2nli
