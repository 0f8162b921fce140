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

// RE instance -> premise/hypothesis pair expansion.

#ifndef RE2NLI_ADAPT_H_
#define RE2NLI_ADAPT_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "re2nli/core_model.h"
#include "re2nli/feasibility.h"
#include "re2nli/ingest.h"
#include "re2nli/metaclass.h"

namespace re2nli {

struct AdaptConfig {
  bool use_filter = true;
  // false: targets come from DegradeMatrix (ablation without meta-classes).
  bool use_metaclass = true;
  // false for unlabeled test splits; every target is then null.
  bool emit_targets = true;
};

struct AdaptedCorpus {
  std::vector<PremiseHypothesisPair> pairs;
  // Instances whose type pair had no feasible class and produced no pairs.
  std::size_t infeasible_instances = 0;
};

class Adapter {
 public:
  // `index` must be present iff config.use_filter; Error(kUsage) otherwise.
  // The matrix must be over the schema's classes.
  Adapter(DatasetSchema schema, const ExclusivityMatrix& matrix,
          std::optional<FeasibilityIndex> index, AdaptConfig config);

  // One pair per candidate class, in schema class order. Candidates are the
  // feasible classes of the instance's type pair, or all classes without the
  // filter.
  std::vector<PremiseHypothesisPair> AdaptInstance(
      const RelationInstance& instance) const;

  // Output order equals input order for any `jobs`. Per-instance failures
  // are collected and rethrown as one error listing the instance ids.
  AdaptedCorpus AdaptSplit(const DatasetSplit& split,
                           unsigned jobs = 1) const;

  const ExclusivityMatrix& effective_matrix() const { return matrix_; }

 private:
  DatasetSchema schema_;
  ExclusivityMatrix matrix_;
  std::optional<FeasibilityIndex> index_;
  AdaptConfig config_;
};

std::vector<PremiseHypothesisPair> AdaptInstance(
    const RelationInstance& instance, const DatasetSchema& schema,
    const ExclusivityMatrix& matrix, const FeasibilityIndex* index,
    const AdaptConfig& config);

AdaptedCorpus AdaptSplit(const DatasetSplit& split, const DatasetSchema& schema,
                         const ExclusivityMatrix& matrix,
                         const FeasibilityIndex* index,
                         const AdaptConfig& config, unsigned jobs = 1);

// Concatenates corpora in order. With `prefix_dataset`, instance ids become
// "<dataset>/<instance_id>" (pair ids follow) so corpora from different
// datasets cannot collide. Remaining collisions raise
// Error(kDuplicatePairId).
AdaptedCorpus Merge(std::span<const AdaptedCorpus> corpora,
                    bool prefix_dataset = true);

void WriteCorpus(std::ostream& out, const AdaptedCorpus& corpus);
AdaptedCorpus ReadCorpus(std::istream& in);
void SaveCorpus(const std::filesystem::path& path, const AdaptedCorpus& corpus);
AdaptedCorpus LoadCorpus(const std::filesystem::path& path);

}  // namespace re2nli

#endif  // RE2NLI_ADAPT_H_
