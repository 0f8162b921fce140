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

#include <sstream>
#include <string>

#include "doctest.h"
#include "re2nli/ingest.h"
#include "re2nli/json_io.h"
#include "re2nli/schema_registry.h"
#include "synthetic.h"
#include "test_util.h"

namespace re2nli {
namespace {

using testing::MakeInstance;
using testing::ThrownKind;

RelationInstance BindExample(std::string id, std::optional<std::string> gold) {
  return MakeInstance(std::move(id), {{'h', "aspirin"}, {'-', "binds"}, {'t', "COX-2"}},
                      "ChemicalEntity", "GeneOrGeneProduct", std::move(gold),
                      "biored");
}

std::string Lines(const std::vector<RelationInstance>& xs) {
  std::string out;
  for (const auto& x : xs) out += DumpLine(ToJson(x)) + "\n";
  return out;
}

DatasetSplit Parse(const std::string& text, const DatasetSchema& schema,
                   SplitName name = SplitName::kTrain) {
  std::istringstream in(text);
  return ParseSplit(in, schema, name);
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("two valid lines parse to two instances") {
  const DatasetSchema biored = ResolveSchema("biored");
  const auto a = BindExample("a", "Bind");
  const auto b = BindExample("b", "Association");
  DatasetSplit split = Parse(Lines({a, b}), biored);
  REQUIRE(split.instances.size() == 2);
  CHECK(split.instances[0] == a);
  CHECK(split.instances[1] == b);
}

TEST_CASE("blank lines and CRLF are tolerated") {
  const DatasetSchema biored = ResolveSchema("biored");
  const std::string line = DumpLine(ToJson(BindExample("a", "Bind")));
  CHECK(Parse("\n" + line + "\r\n\n", biored).instances.size() == 1);
}

TEST_CASE("validation errors") {
  const DatasetSchema biored = ResolveSchema("biored");

  SUBCASE("unknown label") {
    CHECK(ThrownKind([&] { Parse(Lines({BindExample("a", "bindz")}), biored); }) ==
          ErrorKind::kUnknownLabel);
  }
  SUBCASE("span end past the text") {
    auto x = BindExample("a", "Bind");
    x.tail.spans[0].end = testing::CodePoints(x.text) + 1;
    CHECK(ThrownKind([&] { Parse(Lines({x}), biored); }) ==
          ErrorKind::kSpanOutOfBounds);
    x.tail.spans[0].end = testing::CodePoints(x.text);
    CHECK_NOTHROW(Parse(Lines({x}), biored));
  }
  SUBCASE("empty span") {
    auto x = BindExample("a", "Bind");
    x.head.spans[0].end = x.head.spans[0].start;
    CHECK(ThrownKind([&] { Parse(Lines({x}), biored); }) ==
          ErrorKind::kSpanOutOfBounds);
  }
  SUBCASE("offsets count code points, not bytes") {
    // "β" is two bytes; a byte-based bound would accept end = 9.
    auto x = MakeInstance("a", {{'h', "β"}, {'t', "TP53"}}, "G", "G", "Bind");
    CHECK(x.text.size() == 7);
    x.tail.spans[0].end = 7;
    CHECK(ThrownKind([&] { Parse(Lines({x}), biored); }) ==
          ErrorKind::kSpanOutOfBounds);
  }
  SUBCASE("duplicate id") {
    const std::string text =
        Lines({BindExample("a", "Bind"), BindExample("a", "Association")});
    CHECK(ThrownKind([&] { Parse(text, biored); }) == ErrorKind::kDuplicateId);
    try {
      Parse(text, biored);
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("malformed json") {
    const std::string text = Lines({BindExample("a", "Bind")}) + "{not json\n";
    CHECK(ThrownKind([&] { Parse(text, biored); }) == ErrorKind::kMalformedLine);
    try {
      Parse(text, biored);
    } catch (const Error& e) {
      CHECK(std::string(e.what()).rfind("line 2", 0) == 0);
    }
    CHECK(ThrownKind([&] { Parse("[1,2]\n", biored); }) == ErrorKind::kMalformedLine);
    CHECK(ThrownKind([&] { Parse(R"({"id":"a"})" "\n", biored); }) ==
          ErrorKind::kMalformedLine);
  }
  SUBCASE("head and tail overlap") {
    auto x = MakeInstance("a", {{'h', "IL-6"}, {'-', "x"}}, "G", "G", "Bind");
    x.tail = x.head;
    CHECK(ThrownKind([&] { Parse(Lines({x}), biored); }) == ErrorKind::kSelfRelation);
    x.tail.spans = {{2, 6}};
    CHECK(ThrownKind([&] { Parse(Lines({x}), biored); }) ==
          ErrorKind::kOverlappingSpans);
  }
  SUBCASE("mention spans overlap each other") {
    auto x = MakeInstance("a", {{'h', "IL-6"}, {'t', "TP53"}}, "G", "G", "Bind");
    x.head.spans = {{0, 3}, {2, 4}};
    CHECK(ThrownKind([&] { Parse(Lines({x}), biored); }) ==
          ErrorKind::kOverlappingSpans);
  }
  SUBCASE("unlabeled instances only in test splits") {
    const std::string text = Lines({BindExample("a", std::nullopt)});
    CHECK(ThrownKind([&] { Parse(text, biored, SplitName::kTrain); }) ==
          ErrorKind::kMissingLabel);
    CHECK(ThrownKind([&] { Parse(text, biored, SplitName::kDev); }) ==
          ErrorKind::kMissingLabel);
    CHECK(Parse(text, biored, SplitName::kTest).instances.size() == 1);
  }
}

TEST_CASE("write then load is the identity") {
  testing::Rng rng(11);
  for (std::size_t m : {2u, 5u, 17u, 40u}) {
    const DatasetSchema schema = testing::RandomSchema(rng, m);
    DatasetSplit split = testing::SyntheticSplit(schema, rng, {});
    std::ostringstream out;
    WriteSplit(out, split);
    DatasetSplit back = Parse(out.str(), schema);
    CHECK(back.instances == split.instances);
  }
}

TEST_CASE("split stats") {
  const DatasetSchema biored = ResolveSchema("biored");

  SUBCASE("empty split") {
    StatsReport r = SplitStats(DatasetSplit{}, biored);
    CHECK(r.total == 0);
    CHECK(r.unlabeled == 0);
    CHECK(r.per_type_pair.empty());
    CHECK(r.per_class.size() == biored.size());
    for (const auto& [cls, n] : r.per_class) CHECK(n == 0);
  }

  SUBCASE("conservation") {
    DatasetSplit s;
    s.instances = {BindExample("a", "Bind"), BindExample("b", "Bind"),
                   BindExample("c", "Association")};
    StatsReport r = SplitStats(s, biored);
    std::size_t sum = 0;
    for (const auto& [cls, n] : r.per_class) sum += n;
    CHECK(sum == 3);
    CHECK(r.total == 3);
  }

  SUBCASE("hand tally over ten instances") {
    // (label, head type, tail type):
    //   Bind C G  x3
    //   Association G D  x2, Association C D  x1
    //   Positive Correlation C D  x2
    //   Comparison C C  x1
    //   unlabeled G D  x1
    // per class: Bind 3, Association 3, Positive Correlation 2,
    //            Comparison 1, others 0; unlabeled 1.
    // per pair: (C,G) 3, (G,D) 3, (C,D) 3, (C,C) 1.
    struct Row {
      std::optional<std::string> label;
      std::string h, t;
    };
    const std::vector<Row> rows = {
        {"Bind", "C", "G"}, {"Bind", "C", "G"}, {"Bind", "C", "G"},
        {"Association", "G", "D"}, {"Association", "G", "D"},
        {"Association", "C", "D"}, {"Positive Correlation", "C", "D"},
        {"Positive Correlation", "C", "D"}, {"Comparison", "C", "C"},
        {std::nullopt, "G", "D"}};
    DatasetSplit s;
    s.name = SplitName::kTest;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s.instances.push_back(MakeInstance("x" + std::to_string(i),
                                         {{'h', "A"}, {'t', "B"}}, rows[i].h,
                                         rows[i].t, rows[i].label));
    }
    StatsReport r = SplitStats(s, biored);
    CHECK(r.total == 10);
    CHECK(r.unlabeled == 1);
    std::map<std::string, std::size_t> per_class(r.per_class.begin(),
                                                 r.per_class.end());
    CHECK(per_class["Bind"] == 3);
    CHECK(per_class["Association"] == 3);
    CHECK(per_class["Positive Correlation"] == 2);
    CHECK(per_class["Comparison"] == 1);
    CHECK(per_class["Negative Correlation"] == 0);
    CHECK(per_class["Drug Interaction"] == 0);
    CHECK(r.per_class.front().first == "Positive Correlation");
    CHECK(r.per_type_pair.size() == 4);
    CHECK(r.per_type_pair.at({"C", "G"}) == 3);
    CHECK(r.per_type_pair.at({"G", "D"}) == 3);
    CHECK(r.per_type_pair.at({"C", "D"}) == 3);
    CHECK(r.per_type_pair.at({"C", "C"}) == 1);
  }
}

TEST_CASE("split names") {
  CHECK(SplitNameFromString("dev") == SplitName::kDev);
  CHECK(ToString(SplitName::kTest) == "test");
  CHECK_FALSE(SplitNameFromString("validation").has_value());
}

}  // TEST_SUITE

}  // namespace re2nli
