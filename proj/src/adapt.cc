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

#include "re2nli/adapt.h"

#include <algorithm>
#include <thread>
#include <unordered_set>
#include <utility>

#include "re2nli/error.h"
#include "re2nli/json_io.h"
#include "re2nli/verbalizer.h"

namespace re2nli {
namespace {

struct InstanceOutcome {
  std::vector<PremiseHypothesisPair> pairs;
  std::optional<Error> error;
};

}  // namespace

Adapter::Adapter(DatasetSchema schema, const ExclusivityMatrix& matrix,
                 std::optional<FeasibilityIndex> index, AdaptConfig config)
    : schema_(std::move(schema)),
      matrix_(config.use_metaclass ? matrix : DegradeMatrix(matrix, schema_)),
      index_(std::move(index)),
      config_(config) {
  if (config_.use_filter != index_.has_value()) {
    throw Error(ErrorKind::kUsage,
                config_.use_filter
                    ? "the feasible-hypothesis filter needs an index"
                    : "an index was given but the filter is disabled");
  }
  if (matrix_.classes() != schema_.classes()) {
    throw Error(ErrorKind::kInvalidMatrix,
                "matrix classes differ from schema '" + schema_.name() + "'");
  }
  if (index_ && index_->classes() != schema_.classes()) {
    throw Error(ErrorKind::kUnknownClass,
                "index classes differ from schema '" + schema_.name() + "'");
  }
}

std::vector<PremiseHypothesisPair> Adapter::AdaptInstance(
    const RelationInstance& instance) const {
  std::optional<std::size_t> gold;
  if (config_.emit_targets) {
    if (!instance.gold_label) {
      throw Error(ErrorKind::kUnlabeledInstance,
                  "instance '" + instance.id + "' has no gold label");
    }
    gold = schema_.IndexOf(*instance.gold_label);
    if (!gold) {
      throw Error(ErrorKind::kUnknownLabel,
                  "instance '" + instance.id + "': label '" +
                      *instance.gold_label + "' is not in the schema");
    }
  }

  const std::string premise = BuildPremise(instance, schema_);
  const std::string& dataset =
      instance.dataset.empty() ? schema_.name() : instance.dataset;

  std::vector<PremiseHypothesisPair> pairs;
  for (std::size_t j = 0; j < schema_.size(); ++j) {
    if (index_ && !index_->Allows(j, instance.head.entity_type,
                                  instance.tail.entity_type)) {
      continue;
    }
    const std::string& cls = schema_.classes()[j];
    PremiseHypothesisPair pair;
    pair.pair_id = MakePairId(instance.id, cls);
    pair.instance_id = instance.id;
    pair.premise = premise;
    pair.hypothesis = FillHypothesis(schema_.TemplateFor(cls), instance, schema_);
    pair.hypothesis_class = cls;
    if (gold) pair.target = matrix_.at(*gold, j);
    pair.dataset = dataset;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

AdaptedCorpus Adapter::AdaptSplit(const DatasetSplit& split,
                                  unsigned jobs) const {
  const std::size_t n = split.instances.size();
  std::vector<InstanceOutcome> outcomes(n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        outcomes[i].pairs = AdaptInstance(split.instances[i]);
      } catch (const Error& e) {
        outcomes[i].error = e;
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(jobs == 0 ? 1 : jobs, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      threads.emplace_back(work, begin, end);
    }
  }

  AdaptedCorpus corpus;
  std::string failures;
  std::optional<ErrorKind> first_kind;
  for (std::size_t i = 0; i < n; ++i) {
    if (outcomes[i].error) {
      if (!first_kind) first_kind = outcomes[i].error->kind();
      failures += "\n  " + split.instances[i].id + ": " +
                  outcomes[i].error->what();
      continue;
    }
    if (outcomes[i].pairs.empty()) ++corpus.infeasible_instances;
    for (auto& pair : outcomes[i].pairs) corpus.pairs.push_back(std::move(pair));
  }
  if (first_kind) {
    throw Error(*first_kind, "adaptation failed for:" + failures);
  }
  return corpus;
}

std::vector<PremiseHypothesisPair> AdaptInstance(
    const RelationInstance& instance, const DatasetSchema& schema,
    const ExclusivityMatrix& matrix, const FeasibilityIndex* index,
    const AdaptConfig& config) {
  Adapter adapter(schema, matrix,
                  index ? std::optional<FeasibilityIndex>(*index) : std::nullopt,
                  config);
  return adapter.AdaptInstance(instance);
}

AdaptedCorpus AdaptSplit(const DatasetSplit& split, const DatasetSchema& schema,
                         const ExclusivityMatrix& matrix,
                         const FeasibilityIndex* index,
                         const AdaptConfig& config, unsigned jobs) {
  Adapter adapter(schema, matrix,
                  index ? std::optional<FeasibilityIndex>(*index) : std::nullopt,
                  config);
  return adapter.AdaptSplit(split, jobs);
}

AdaptedCorpus Merge(std::span<const AdaptedCorpus> corpora,
                    bool prefix_dataset) {
  AdaptedCorpus merged;
  std::unordered_set<std::string> seen;
  for (const auto& corpus : corpora) {
    merged.infeasible_instances += corpus.infeasible_instances;
    for (const auto& pair : corpus.pairs) {
      PremiseHypothesisPair out = pair;
      if (prefix_dataset) {
        out.instance_id = pair.dataset + "/" + pair.instance_id;
        out.pair_id = MakePairId(out.instance_id, out.hypothesis_class);
      }
      if (!seen.insert(out.pair_id).second) {
        throw Error(ErrorKind::kDuplicatePairId,
                    "pair id '" + out.pair_id + "' occurs more than once");
      }
      merged.pairs.push_back(std::move(out));
    }
  }
  return merged;
}

void WriteCorpus(std::ostream& out, const AdaptedCorpus& corpus) {
  for (const auto& pair : corpus.pairs) out << DumpLine(ToJson(pair)) << '\n';
}

AdaptedCorpus ReadCorpus(std::istream& in) {
  AdaptedCorpus corpus;
  ForEachJsonLine(in, [&](const Json& j, std::size_t) {
    corpus.pairs.push_back(PremiseHypothesisPairFromJson(j));
  });
  return corpus;
}

void SaveCorpus(const std::filesystem::path& path, const AdaptedCorpus& corpus) {
  std::ofstream out = OpenForWrite(path);
  WriteCorpus(out, corpus);
  if (!out) throw Error(ErrorKind::kIo, "write failed: '" + path.string() + "'");
}

AdaptedCorpus LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  return ReadCorpus(in);
}

}  // namespace re2nli
