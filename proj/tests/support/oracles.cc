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

#include "oracles.h"

#include <algorithm>
#include <set>

namespace re2nli::testing {

ConfusionCounts ConfusionOracle(const std::vector<RePrediction>& predictions,
                                const DatasetSplit& gold,
                                const DatasetSchema& schema,
                                bool include_negative) {
  const std::size_t m = schema.size();
  std::vector<std::vector<std::size_t>> conf(m, std::vector<std::size_t>(m + 1, 0));
  std::vector<std::size_t> row_total(m, 0);
  for (const auto& x : gold.instances) {
    const std::size_t g = *schema.IndexOf(*x.gold_label);
    ++row_total[g];
    std::set<std::size_t> emitted;
    bool found = false;
    for (const auto& p : predictions) {
      if (p.instance_id != x.id) continue;
      found = true;
      for (const auto& c : p.classes) emitted.insert(*schema.IndexOf(c));
    }
    if (!found && schema.negative_class()) {
      emitted.insert(*schema.IndexOf(*schema.negative_class()));
    }
    if (emitted.empty()) ++conf[g][m];
    for (std::size_t p : emitted) ++conf[g][p];
  }
  ConfusionCounts out;
  for (std::size_t c = 0; c < m; ++c) {
    if (!include_negative && schema.IsNegative(schema.classes()[c])) continue;
    out.tp += conf[c][c];
    out.fn += row_total[c] - conf[c][c];
    for (std::size_t g = 0; g < m; ++g) {
      if (g != c) out.fp += conf[g][c];
    }
  }
  return out;
}

Probabilities SampleEntailTriple(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const double sum = x + y + z;
    if (sum == 0.0) continue;
    const Probabilities p{x / sum, y / sum, 1.0 - x / sum - y / sum};
    if (p.entail > p.neutral && p.entail > p.contradict && p.contradict >= 0.0) {
      return p;
    }
  }
}

std::vector<RePrediction> RandomRePredictions(const DatasetSplit& gold,
                                              const DatasetSchema& schema,
                                              Rng& rng) {
  std::vector<RePrediction> preds;
  for (const auto& x : gold.instances) {
    const std::size_t mode = rng() % 5;
    if (mode == 0) continue;
    RePrediction p{x.id, {}, false};
    if (mode == 1) {
      p.abstained = true;
      if (schema.negative_class()) p.classes.push_back(*schema.negative_class());
    } else if (mode == 2) {
      p.classes.push_back(*x.gold_label);
    } else {
      const std::size_t k = rng() % (schema.size() + 1);
      for (std::size_t j = 0; j < k; ++j) {
        p.classes.push_back(schema.classes()[rng() % schema.size()]);
      }
      p.abstained = p.classes.empty();
    }
    preds.push_back(std::move(p));
  }
  std::shuffle(preds.begin(), preds.end(), rng);
  return preds;
}

std::vector<std::string> ScanFeasible(const DatasetSplit& train,
                                      const DatasetSchema& schema,
                                      const RelationInstance& instance) {
  std::vector<std::string> out;
  for (const auto& cls : schema.classes()) {
    for (const auto& t : train.instances) {
      if (t.gold_label == cls && t.head.entity_type == instance.head.entity_type &&
          t.tail.entity_type == instance.tail.entity_type) {
        out.push_back(cls);
        break;
      }
    }
  }
  return out;
}

}  // namespace re2nli::testing
