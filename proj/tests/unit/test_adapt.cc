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

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "re2nli/adapt.h"
#include "re2nli/feasibility.h"
#include "re2nli/metaclass.h"
#include "re2nli/schema_registry.h"
#include "re2nli/verbalizer.h"
#include "synthetic.h"
#include "test_util.h"

namespace re2nli {
namespace {

using testing::MakeInstance;
using testing::ThrownKind;

constexpr AdaptConfig kNoFilter{false, true, true};

RelationInstance GeneDisease(const std::string& id, std::optional<std::string> gold) {
  return MakeInstance(id, {{'h', "BRCA1"}, {'-', "raises"}, {'t', "cancer"}, {'-', "risk"}},
                      "GeneOrGeneProduct", "DiseaseOrPhenotypicFeature",
                      std::move(gold), "biored");
}

// Recomputes an instance's pairs one class at a time from the lower-level ops.
std::vector<PremiseHypothesisPair> Oracle(const RelationInstance& x,
                                          const DatasetSchema& s,
                                          const ExclusivityMatrix& m,
                                          const FeasibilityIndex* idx) {
  std::vector<PremiseHypothesisPair> out;
  for (const auto& cls : s.classes()) {
    if (idx) {
      const auto f = FeasibleClasses(*idx, x.head.entity_type, x.tail.entity_type);
      if (std::find(f.begin(), f.end(), cls) == f.end()) continue;
    }
    out.push_back({x.id + "::" + cls, x.id, BuildPremise(x, s),
                   FillHypothesis(s.TemplateFor(cls), x, s), cls,
                   NliTarget(m, *x.gold_label, cls), x.dataset});
  }
  return out;
}

std::string Serialize(const AdaptedCorpus& c) {
  std::ostringstream out;
  WriteCorpus(out, c);
  return out.str();
}

}  // namespace

TEST_SUITE("adapt") {

TEST_CASE("filtered biored instance yields one pair per feasible class") {
  const DatasetSchema s = ResolveSchema("biored");
  FeasibilityIndex idx(s.classes());
  const TypePair gd{"GeneOrGeneProduct", "DiseaseOrPhenotypicFeature"};
  for (const char* c : {"Positive Correlation", "Negative Correlation", "Association"}) {
    idx.Add(c, gd);
  }
  idx.Add("Bind", {"GeneOrGeneProduct", "GeneOrGeneProduct"});

  const auto pairs = AdaptInstance(GeneDisease("d1", "Positive Correlation"), s,
                                   BuildMatrix(s), &idx, {});
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].hypothesis_class == "Positive Correlation");
  CHECK(pairs[1].hypothesis_class == "Negative Correlation");
  CHECK(pairs[2].hypothesis_class == "Association");
  CHECK(pairs[0].target == NliLabel::kEntail);
  CHECK(pairs[1].target == NliLabel::kContradict);
  CHECK(pairs[2].target == NliLabel::kNeutral);
  CHECK(pairs[0].pair_id == "d1::Positive Correlation");
  CHECK(pairs[0].premise ==
        "@GeneOrGeneProduct$ raises @DiseaseOrPhenotypicFeature$ risk");
  for (const auto& p : pairs) CHECK(p.dataset == "biored");
}

TEST_CASE("ablating meta-classes turns clique contradictions neutral") {
  const DatasetSchema s = ResolveSchema("biored");
  const auto pairs =
      AdaptInstance(GeneDisease("d1", "Positive Correlation"), s, BuildMatrix(s),
                    nullptr, {false, false, true});
  REQUIRE(pairs.size() == 8);
  CHECK(pairs[1].target == NliLabel::kNeutral);
}

TEST_CASE("no filter on chemprot gives five pairs per instance") {
  const DatasetSchema s = ResolveSchema("chemprot");
  testing::Rng rng(41);
  testing::SplitOptions opts;
  opts.instances = 37;
  const DatasetSplit split = testing::SyntheticSplit(s, rng, opts);
  const AdaptedCorpus c = AdaptSplit(split, s, BuildMatrix(s), nullptr, kNoFilter);
  CHECK(c.pairs.size() == 5 * 37);
}

TEST_CASE("small corpora") {
  const DatasetSchema s = ResolveSchema("ddi13");
  const ExclusivityMatrix m = BuildMatrix(s);
  CHECK(AdaptSplit(DatasetSplit{}, s, m, nullptr, kNoFilter).pairs.empty());
  DatasetSplit two;
  two.instances = {MakeInstance("a", {{'h', "x"}, {'t', "y"}}, "D", "D", "Effect"),
                   MakeInstance("b", {{'h', "x"}, {'t', "y"}}, "D", "D", "Advise")};
  CHECK(AdaptSplit(two, s, m, nullptr, kNoFilter).pairs.size() == 8);
}

TEST_CASE("unlabeled test instances adapt without targets") {
  const DatasetSchema s = ResolveSchema("bc5cdr");
  const auto x = MakeInstance("t1", {{'h', "a"}, {'t', "b"}}, "C", "D", std::nullopt);
  const auto pairs = AdaptInstance(x, s, BuildMatrix(s), nullptr, {false, true, false});
  REQUIRE(pairs.size() == 2);
  for (const auto& p : pairs) CHECK_FALSE(p.target.has_value());
  CHECK(ThrownKind([&] { AdaptInstance(x, s, BuildMatrix(s), nullptr, kNoFilter); }) ==
        ErrorKind::kUnlabeledInstance);
}

TEST_CASE("index presence must agree with the filter flag") {
  const DatasetSchema s = ResolveSchema("bc5cdr");
  const auto x = GeneDisease("a", "Associated");
  FeasibilityIndex idx(s.classes());
  CHECK(ThrownKind([&] { AdaptInstance(x, s, BuildMatrix(s), nullptr, {}); }) ==
        ErrorKind::kUsage);
  CHECK(ThrownKind([&] { AdaptInstance(x, s, BuildMatrix(s), &idx, kNoFilter); }) ==
        ErrorKind::kUsage);
}

TEST_CASE("errors are aggregated with instance ids") {
  const DatasetSchema s = ResolveSchema("bc5cdr");
  DatasetSplit split;
  split.instances = {GeneDisease("ok", "Associated"), GeneDisease("bad1", "nope"),
                     GeneDisease("bad2", std::nullopt)};
  try {
    AdaptSplit(split, s, BuildMatrix(s), nullptr, kNoFilter, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("bad1") != std::string::npos);
    CHECK(what.find("bad2") != std::string::npos);
    CHECK(what.find("ok:") == std::string::npos);
  }
}

TEST_CASE("split output equals the per-instance oracle") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const DatasetSchema s = testing::RandomSchema(rng, 2 + trial * 2);
    const DatasetSplit train = testing::SyntheticSplit(s, rng, {});
    testing::SplitOptions opts;
    opts.instances = 60;
    const DatasetSplit dev = testing::SyntheticSplit(s, rng, opts);
    const FeasibilityIndex idx = BuildIndex(train, s);
    const ExclusivityMatrix m = BuildMatrix(s);

    std::vector<PremiseHypothesisPair> expected;
    std::size_t infeasible = 0;
    for (const auto& x : dev.instances) {
      auto part = Oracle(x, s, m, &idx);
      infeasible += part.empty();
      expected.insert(expected.end(), part.begin(), part.end());
    }
    const AdaptedCorpus c = AdaptSplit(dev, s, m, &idx, {});
    CHECK(c.pairs == expected);
    CHECK(c.infeasible_instances == infeasible);

    std::vector<PremiseHypothesisPair> full;
    for (const auto& x : dev.instances) {
      auto part = Oracle(x, s, m, nullptr);
      full.insert(full.end(), part.begin(), part.end());
    }
    CHECK(AdaptSplit(dev, s, m, nullptr, kNoFilter).pairs == full);
    CHECK(full.size() == dev.instances.size() * s.size());
  }
}

TEST_CASE("self-built index keeps exactly one entail per instance") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const DatasetSchema s = testing::RandomSchema(rng, 3 + trial * 4);
    const DatasetSplit split = testing::SyntheticSplit(s, rng, {});
    const FeasibilityIndex idx = BuildIndex(split, s);
    const AdaptedCorpus c = AdaptSplit(split, s, BuildMatrix(s), &idx, {});
    std::map<std::string, std::vector<std::string>> entailed;
    for (const auto& p : c.pairs) {
      if (p.target == NliLabel::kEntail) entailed[p.instance_id].push_back(p.hypothesis_class);
    }
    for (const auto& x : split.instances) {
      REQUIRE(entailed[x.id].size() == 1);
      CHECK(entailed[x.id][0] == *x.gold_label);
    }
  }
}

TEST_CASE("job count does not change the output") {
  testing::Rng rng(53);
  const DatasetSchema s = testing::RandomSchema(rng, 12);
  testing::SplitOptions opts;
  opts.instances = 257;
  const DatasetSplit split = testing::SyntheticSplit(s, rng, opts);
  const FeasibilityIndex idx = BuildIndex(split, s);
  const std::string one = Serialize(AdaptSplit(split, s, BuildMatrix(s), &idx, {}, 1));
  for (unsigned jobs : {2u, 3u, 8u, 64u, 1000u}) {
    CHECK(Serialize(AdaptSplit(split, s, BuildMatrix(s), &idx, {}, jobs)) == one);
  }
}

TEST_CASE("corpus serialization round trips") {
  testing::Rng rng(59);
  const DatasetSchema s = testing::RandomSchema(rng, 9);
  const DatasetSplit split = testing::SyntheticSplit(s, rng, {});
  AdaptedCorpus c = AdaptSplit(split, s, BuildMatrix(s), nullptr, kNoFilter);
  c.pairs[3].target.reset();
  std::istringstream in(Serialize(c));
  CHECK(ReadCorpus(in).pairs == c.pairs);
}

TEST_CASE("merge") {
  const DatasetSchema bc5 = ResolveSchema("bc5cdr");
  const DatasetSchema bio = ResolveSchema("biored");
  testing::Rng rng(61);
  const DatasetSplit a = testing::SyntheticSplit(bc5, rng, {});
  const DatasetSplit b = testing::SyntheticSplit(bio, rng, {});
  const AdaptedCorpus ca = AdaptSplit(a, bc5, BuildMatrix(bc5), nullptr, kNoFilter);
  const AdaptedCorpus cb = AdaptSplit(b, bio, BuildMatrix(bio), nullptr, kNoFilter);

  SUBCASE("one corpus without prefixing is the identity") {
    const AdaptedCorpus one[] = {ca};
    CHECK(Merge(one, false).pairs == ca.pairs);
  }
  SUBCASE("sizes add up and order is kept") {
    const AdaptedCorpus both[] = {ca, cb};
    const AdaptedCorpus m = Merge(both);
    REQUIRE(m.pairs.size() == ca.pairs.size() + cb.pairs.size());
    CHECK(m.pairs.front().instance_id == "bc5cdr/" + ca.pairs.front().instance_id);
    CHECK(m.pairs.front().pair_id ==
          "bc5cdr/" + ca.pairs.front().pair_id);
    CHECK(m.pairs.back().dataset == "biored");
    CHECK(m.pairs.back().premise == cb.pairs.back().premise);
  }
  SUBCASE("colliding ids") {
    AdaptedCorpus clash = ca;
    for (auto& p : clash.pairs) p.dataset = "other";
    const AdaptedCorpus both[] = {ca, clash};
    CHECK(ThrownKind([&] { Merge(both, false); }) == ErrorKind::kDuplicatePairId);
    CHECK(Merge(both, true).pairs.size() == 2 * ca.pairs.size());
    const AdaptedCorpus same[] = {ca, ca};
    CHECK(ThrownKind([&] { Merge(same, true); }) == ErrorKind::kDuplicatePairId);
  }
}

}  // TEST_SUITE

}  // namespace re2nli
