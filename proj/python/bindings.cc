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

// Python bindings. Records cross the boundary as plain dicts and lists in
// the same shape as the JSONL files.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "re2nli/adapt.h"
#include "re2nli/error.h"
#include "re2nli/feasibility.h"
#include "re2nli/ingest.h"
#include "re2nli/json_io.h"
#include "re2nli/metaclass.h"
#include "re2nli/schema_registry.h"
#include "re2nli/select_eval.h"
#include "re2nli/verbalizer.h"

namespace py = pybind11;

namespace re2nli {
namespace {

Json ToCpp(const py::handle& obj) {
  const std::string text =
      py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return Json::parse(text);
}

py::object ToPy(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// A bundled schema name, a path to a pack, or a pack dict.
DatasetSchema SchemaArg(const py::object& schema) {
  if (py::isinstance<py::str>(schema)) {
    return ResolveSchema(schema.cast<std::string>());
  }
  return DatasetSchemaFromJson(ToCpp(schema));
}

DatasetSplit SplitArg(const py::list& instances, const DatasetSchema& schema,
                      SplitName name) {
  DatasetSplit split;
  split.name = name;
  for (const auto& item : instances) {
    RelationInstance instance = RelationInstanceFromJson(ToCpp(item));
    ValidateInstance(instance, schema, name == SplitName::kTest);
    split.instances.push_back(std::move(instance));
  }
  return split;
}

SplitName SplitNameArg(const std::string& name) {
  auto parsed = SplitNameFromString(name);
  if (!parsed) throw Error(ErrorKind::kUsage, "split must be train, dev or test");
  return *parsed;
}

py::list PairsToPy(const std::vector<PremiseHypothesisPair>& pairs) {
  py::list out;
  for (const auto& p : pairs) out.append(ToPy(ToJson(p)));
  return out;
}

std::vector<PredictionRecord> PredictionsArg(const py::list& records) {
  std::vector<PredictionRecord> out;
  for (const auto& r : records) out.push_back(PredictionRecordFromJson(ToCpp(r)));
  return out;
}

}  // namespace
}  // namespace re2nli

PYBIND11_MODULE(_re2nli, m) {
  using namespace re2nli;
  m.doc() = "Relation extraction to NLI conversion and scoring.";

  // Kept alive for the life of the process; the translator may run late.
  static PyObject* error_type =
      PyErr_NewException("re2nli._re2nli.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("kind") = std::string(ErrorKindName(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("bundled_schemas", &BundledSchemaNames);

  m.def("load_schema", [](const py::object& schema) {
    return ToPy(ToJson(SchemaArg(schema)));
  }, py::arg("schema"));

  m.def("validate_split", [](const py::list& instances, const py::object& schema,
                             const std::string& split) {
    return SplitArg(instances, SchemaArg(schema), SplitNameArg(split)).instances.size();
  }, py::arg("instances"), py::arg("schema"), py::arg("split") = "train");

  m.def("build_premise", [](const py::dict& instance, const py::object& schema) {
    return BuildPremise(RelationInstanceFromJson(ToCpp(instance)), SchemaArg(schema));
  }, py::arg("instance"), py::arg("schema"));

  m.def("fill_hypothesis", [](const std::string& text, const py::dict& instance,
                              const py::object& schema) {
    return FillHypothesis({text}, RelationInstanceFromJson(ToCpp(instance)),
                          SchemaArg(schema));
  }, py::arg("template"), py::arg("instance"), py::arg("schema"));

  m.def("build_matrix", [](const py::object& schema, bool use_metaclass) {
    const DatasetSchema s = SchemaArg(schema);
    const ExclusivityMatrix built = BuildMatrix(s);
    return ToPy(ToFixtureJson(use_metaclass ? built : DegradeMatrix(built, s)));
  }, py::arg("schema"), py::arg("use_metaclass") = true);

  m.def("verify_matrix", [](const std::string& name) {
    const DatasetSchema s = ResolveSchema(name);
    return CompareMatrices(LoadMatrixFixture(FixturePathFor(s.name())), BuildMatrix(s))
        .ok();
  }, py::arg("name"));

  m.def("build_index", [](const py::list& instances, const py::object& schema) {
    const DatasetSchema s = SchemaArg(schema);
    return ToPy(ToJson(BuildIndex(SplitArg(instances, s, SplitName::kTrain), s)));
  }, py::arg("instances"), py::arg("schema"));

  m.def("adapt", [](const py::list& instances, const py::object& schema,
                    const std::optional<py::dict>& index, bool use_metaclass,
                    bool emit_targets, const std::string& split, unsigned jobs) {
    const DatasetSchema s = SchemaArg(schema);
    const DatasetSplit parsed = SplitArg(instances, s, SplitNameArg(split));
    std::optional<FeasibilityIndex> idx;
    if (index) idx = FeasibilityIndexFromJson(ToCpp(*index), s);
    const AdaptConfig config{idx.has_value(), use_metaclass, emit_targets};
    AdaptedCorpus corpus;
    {
      py::gil_scoped_release release;
      corpus = Adapter(s, BuildMatrix(s), std::move(idx), config).AdaptSplit(parsed, jobs);
    }
    return PairsToPy(corpus.pairs);
  }, py::arg("instances"), py::arg("schema"), py::arg("index") = py::none(),
     py::arg("use_metaclass") = true, py::arg("emit_targets") = true,
     py::arg("split") = "train", py::arg("jobs") = 1);

  m.def("parse_nli_label", [](const std::string& text) {
    return std::string(ToString(ParseNliLabel(text)));
  }, py::arg("text"));

  m.def("select", [](const py::list& predictions, const py::object& schema,
                     bool grouped) {
    const DatasetSchema s = SchemaArg(schema);
    const auto records = PredictionsArg(predictions);
    py::list out;
    for (const auto& p : BackMap(SelectAll(records, s, grouped), s)) {
      out.append(ToPy(ToJson(p)));
    }
    return out;
  }, py::arg("predictions"), py::arg("schema"), py::arg("grouped") = true);

  m.def("evaluate", [](const py::list& re_predictions, const py::list& gold,
                       const py::object& schema, bool include_negative) {
    const DatasetSchema s = SchemaArg(schema);
    std::vector<RePrediction> preds;
    for (const auto& p : re_predictions) preds.push_back(RePredictionFromJson(ToCpp(p)));
    return ToPy(ToJson(Evaluate(preds, SplitArg(gold, s, SplitName::kTest), s,
                                include_negative)));
  }, py::arg("re_predictions"), py::arg("gold"), py::arg("schema"),
     py::arg("include_negative") = false);
}
