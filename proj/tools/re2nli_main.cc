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

// re2nli: relation-extraction -> NLI corpus conversion and evaluation.
//
// Sample usage:
//   re2nli build-index --schema biored --split train.jsonl --out idx.json
//   re2nli adapt --schema biored --split train.jsonl --index idx.json \
//       --out pairs.jsonl
//   re2nli eval --schema biored --pred preds.jsonl --split test.jsonl \
//       --out report.json
//   re2nli verify-matrix --schema chemprot
//
// Data goes to --out files only; logs and errors go to stderr. Failures print
// one JSON line {"error": <kind>, "message": ..., "exit_code": n} and exit
// with 1 (usage), 2 (validation) or 3 (I/O).

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "re2nli/adapt.h"
#include "re2nli/error.h"
#include "re2nli/feasibility.h"
#include "re2nli/ingest.h"
#include "re2nli/json_io.h"
#include "re2nli/metaclass.h"
#include "re2nli/schema_registry.h"
#include "re2nli/select_eval.h"

namespace {

using namespace re2nli;
namespace fs = std::filesystem;

struct Options {
  std::string schema;
  std::string split;
  std::string split_kind;
  std::string index;
  std::string pred;
  std::string out;
  std::string fixture;
  std::string data_dir;
  std::vector<std::string> inputs;
  bool no_filter = false;
  bool no_metaclass = false;
  bool no_targets = false;
  bool no_group_selection = false;
  bool include_negative = false;
  bool no_prefix = false;
  bool all_schemas = false;
  unsigned jobs = 1;
  long long seed = 0;
};

void Log(const std::string& message) { std::cerr << "re2nli: " << message << '\n'; }

int Fail(ErrorKind kind, const std::string& message) {
  const int code = ExitCodeFor(kind);
  Json line;
  line["error"] = std::string(ErrorKindName(kind));
  line["message"] = message;
  line["exit_code"] = code;
  std::cerr << line.dump(-1, ' ', false, Json::error_handler_t::replace)
            << '\n';
  return code;
}

DatasetSchema Schema(const Options& o) { return ResolveSchema(o.schema, o.data_dir); }

// Empty --split-kind picks the subcommand's default.
SplitName Kind(const Options& o, SplitName fallback) {
  if (o.split_kind.empty()) return fallback;
  auto kind = SplitNameFromString(o.split_kind);
  if (!kind) {
    throw Error(ErrorKind::kUsage, "--split-kind must be train, dev or test");
  }
  return *kind;
}

template <typename Fn>
void WriteOut(const std::string& path, Fn&& write) {
  std::ofstream out = OpenForWrite(path);
  write(out);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed: '" + path + "'");
}

int RunAdapt(const Options& o) {
  const DatasetSchema schema = Schema(o);
  const DatasetSplit split = LoadSplit(o.split, schema, Kind(o, SplitName::kTrain));
  AdaptConfig config;
  config.use_filter = !o.no_filter;
  config.use_metaclass = !o.no_metaclass;
  config.emit_targets = !o.no_targets;

  std::optional<FeasibilityIndex> index;
  if (config.use_filter) {
    if (o.index.empty()) {
      throw Error(ErrorKind::kUsage,
                  "adapt needs --index <file> (or --no-filter)");
    }
    index = LoadIndex(o.index, schema);
  } else if (!o.index.empty()) {
    throw Error(ErrorKind::kUsage, "--index and --no-filter are exclusive");
  }
  const Adapter adapter(schema, BuildMatrix(schema), std::move(index), config);
  const AdaptedCorpus corpus = adapter.AdaptSplit(split, o.jobs);
  WriteOut(o.out, [&](std::ostream& out) { WriteCorpus(out, corpus); });
  Log("wrote " + std::to_string(corpus.pairs.size()) + " pairs from " +
      std::to_string(split.instances.size()) + " instances to " + o.out);
  if (corpus.infeasible_instances > 0) {
    Log("warning: " + std::to_string(corpus.infeasible_instances) +
        " instances had no feasible class and will abstain");
  }
  return 0;
}

int RunBuildIndex(const Options& o) {
  const DatasetSchema schema = Schema(o);
  const DatasetSplit split = LoadSplit(o.split, schema, Kind(o, SplitName::kTrain));
  const FeasibilityIndex index = BuildIndex(split, schema);
  SaveIndex(o.out, index);
  std::size_t pairs = 0;
  for (const auto& cls : index.classes()) pairs += index.PairsFor(cls).size();
  Log("indexed " + std::to_string(pairs) + " (class, type pair) entries from " +
      std::to_string(split.instances.size()) + " instances to " + o.out);
  return 0;
}

std::vector<RePrediction> SelectAndMap(const Options& o,
                                       const DatasetSchema& schema) {
  const std::vector<PredictionRecord> records = LoadPredictions(o.pred);
  const std::vector<SelectionResult> selections =
      SelectAll(records, schema, !o.no_group_selection);
  return BackMap(selections, schema);
}

int RunSelect(const Options& o) {
  const DatasetSchema schema = Schema(o);
  const std::vector<RePrediction> predictions = SelectAndMap(o, schema);
  WriteOut(o.out,
           [&](std::ostream& out) { WriteRePredictions(out, predictions); });
  std::size_t abstained = 0;
  for (const auto& p : predictions) abstained += p.abstained ? 1 : 0;
  Log("selected " + std::to_string(predictions.size()) + " instances (" +
      std::to_string(abstained) + " abstained) to " + o.out);
  return 0;
}

int RunEval(const Options& o) {
  const DatasetSchema schema = Schema(o);
  const DatasetSplit gold = LoadSplit(o.split, schema, Kind(o, SplitName::kTest));
  const std::vector<RePrediction> predictions = SelectAndMap(o, schema);
  const EvalReport report =
      Evaluate(predictions, gold, schema, o.include_negative);
  if (!o.out.empty()) WriteJsonFile(o.out, ToJson(report));
  Log("micro P=" + std::to_string(report.micro_precision) +
      " R=" + std::to_string(report.micro_recall) +
      " F1=" + std::to_string(report.micro_f1) + " (tp=" +
      std::to_string(report.tp) + " fp=" + std::to_string(report.fp) +
      " fn=" + std::to_string(report.fn) + ", " +
      std::to_string(report.abstention_count) + " abstentions)");
  return 0;
}

int RunMerge(const Options& o) {
  std::vector<AdaptedCorpus> corpora;
  for (const auto& path : o.inputs) corpora.push_back(LoadCorpus(path));
  const AdaptedCorpus merged = Merge(corpora, !o.no_prefix);
  WriteOut(o.out, [&](std::ostream& out) { WriteCorpus(out, merged); });
  Log("merged " + std::to_string(corpora.size()) + " corpora, " +
      std::to_string(merged.pairs.size()) + " pairs, to " + o.out);
  return 0;
}

int RunStats(const Options& o) {
  const DatasetSchema schema = Schema(o);
  const DatasetSplit split = LoadSplit(o.split, schema, Kind(o, SplitName::kTest));
  const StatsReport stats = SplitStats(split, schema);
  if (!o.out.empty()) WriteJsonFile(o.out, ToJson(stats));
  Log(std::to_string(stats.total) + " instances, " +
      std::to_string(stats.unlabeled) + " unlabeled, " +
      std::to_string(stats.per_type_pair.size()) + " type pairs");
  return 0;
}

// Prints one PASS/FAIL line per schema to stdout.
bool VerifyOne(const std::string& name_or_path, const Options& o,
               const std::string& fixture_override) {
  const DatasetSchema schema = ResolveSchema(name_or_path, o.data_dir);
  const fs::path fixture = fixture_override.empty()
                               ? FixturePathFor(schema.name(), o.data_dir)
                               : fs::path(fixture_override);
  const ExclusivityMatrix built = BuildMatrix(schema);
  const MatrixComparison cmp = CompareMatrices(LoadMatrixFixture(fixture), built);
  const std::vector<std::string> problems = CheckMatrixInvariants(built, schema);
  const bool ok = cmp.ok() && problems.empty();
  std::cout << (ok ? "PASS " : "FAIL ") << schema.name() << " (m=" << schema.size()
            << ", " << cmp.cells_compared << " cells)\n";
  if (!cmp.same_classes) std::cout << "  class lists differ\n";
  for (const auto& mm : cmp.mismatches) {
    std::cout << "  cell [" << mm.gold << "][" << mm.hypothesis
              << "]: fixture=" << FixtureCode(mm.expected)
              << " built=" << FixtureCode(mm.actual) << '\n';
  }
  for (const auto& p : problems) std::cout << "  invariant: " << p << '\n';
  return ok;
}

int RunVerifyMatrix(const Options& o) {
  bool ok = true;
  if (o.all_schemas) {
    for (const auto& name : BundledSchemaNames()) ok = VerifyOne(name, o, "") && ok;
  } else {
    if (o.schema.empty()) {
      throw Error(ErrorKind::kUsage, "verify-matrix needs --schema or --all");
    }
    ok = VerifyOne(o.schema, o, o.fixture);
  }
  std::cout.flush();
  if (!ok) {
    throw Error(ErrorKind::kInvalidMatrix,
                "rule-built matrix differs from fixture");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Convert relation-extraction data to NLI pairs and score "
               "NLI predictions as relation labels."};
  app.require_subcommand(1);
  app.add_option("--data-dir", o.data_dir,
                 "Directory with bundled schemas/ and matrices/");
  app.add_option("--jobs", o.jobs, "Worker threads (output is identical "
                                   "for any value)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Reserved; the pipeline is deterministic");

  auto schema_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--schema", o.schema,
                                "Bundled schema name or path to a pack");
    if (required) opt->required();
  };
  auto split_opts = [&](CLI::App* sub, const char* help) {
    sub->add_option("--split", o.split, help)->required();
    sub->add_option("--split-kind", o.split_kind,
                    "train, dev or test; only test may be unlabeled");
  };

  auto* adapt = app.add_subcommand("adapt", "Expand instances into NLI pairs");
  schema_opt(adapt, true);
  split_opts(adapt, "Canonical instance JSONL (default kind: train)");
  adapt->add_option("--index", o.index, "Feasibility index from build-index");
  adapt->add_flag("--no-filter", o.no_filter, "Emit a pair for every class");
  adapt->add_flag("--no-metaclass", o.no_metaclass,
                  "Neutral instead of contradict between positive classes");
  adapt->add_flag("--no-targets", o.no_targets,
                  "Leave targets null (unlabeled test data)");
  adapt->add_option("--out", o.out, "Output pairs JSONL")->required();
  adapt->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* build_index = app.add_subcommand(
      "build-index", "Collect (head type, tail type) pairs per class");
  schema_opt(build_index, true);
  split_opts(build_index, "Training JSONL (default kind: train)");
  build_index->add_option("--out", o.out, "Output index JSON")->required();

  auto* select = app.add_subcommand(
      "select", "Group pair predictions and map them back to RE labels");
  schema_opt(select, true);
  select->add_option("--pred", o.pred, "Prediction JSONL")->required();
  select->add_flag("--no-group-selection", o.no_group_selection,
                   "Keep every entailed class per instance");
  select->add_option("--out", o.out, "Output RE predictions JSONL")->required();

  auto* eval = app.add_subcommand("eval", "Micro-F1 of predictions vs gold");
  schema_opt(eval, true);
  eval->add_option("--pred", o.pred, "Prediction JSONL")->required();
  split_opts(eval, "Gold JSONL (default kind: test)");
  eval->add_flag("--no-group-selection", o.no_group_selection,
                 "Keep every entailed class per instance");
  eval->add_flag("--include-negative", o.include_negative,
                 "Score the negative class as a positive class");
  eval->add_option("--out", o.out, "Output report JSON");

  auto* merge = app.add_subcommand("merge", "Concatenate adapted corpora");
  merge->add_option("inputs", o.inputs, "Pairs JSONL files")->required();
  merge->add_flag("--no-prefix", o.no_prefix,
                  "Keep instance ids as-is instead of prefixing the dataset");
  merge->add_option("--out", o.out, "Output pairs JSONL")->required();

  auto* stats = app.add_subcommand("stats", "Per-class and type-pair counts");
  schema_opt(stats, true);
  split_opts(stats, "Canonical instance JSONL (default kind: test)");
  stats->add_option("--out", o.out, "Output stats JSON");

  auto* verify = app.add_subcommand(
      "verify-matrix", "Compare rule-built matrices with the shipped fixtures");
  schema_opt(verify, false);
  verify->add_option("--fixture", o.fixture, "Fixture JSON (default: bundled)");
  verify->add_flag("--all", o.all_schemas, "Verify every bundled schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail(ErrorKind::kUsage, e.what());
  }
  try {
    if (adapt->parsed()) return RunAdapt(o);
    if (build_index->parsed()) return RunBuildIndex(o);
    if (select->parsed()) return RunSelect(o);
    if (eval->parsed()) return RunEval(o);
    if (merge->parsed()) return RunMerge(o);
    if (stats->parsed()) return RunStats(o);
    if (verify->parsed()) return RunVerifyMatrix(o);
  } catch (const Error& e) {
    return Fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return Fail(ErrorKind::kIo, e.what());
  }
  return Fail(ErrorKind::kUsage, "no subcommand");
}
