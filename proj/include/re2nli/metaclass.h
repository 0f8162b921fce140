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

// Class-exclusivity matrices and NLI target assignment.
//
// cell(g, h) is the NLI target of the hypothesis for class h when the gold
// class is g:
//   entail      when h == g;
//   contradict  when g and h are definitionally mutually exclusive, i.e.
//               share an exclusivity clique, or exactly one of them is the
//               negative ("no relation") class;
//   neutral     otherwise.
//
// Fixture files encode cells as 0 = contradict, 1 = neutral, 2 = entail.

#ifndef RE2NLI_METACLASS_H_
#define RE2NLI_METACLASS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "re2nli/core_model.h"
#include "re2nli/json_io.h"

namespace re2nli {

class ExclusivityMatrix {
 public:
  // `cells` is row-major, classes.size()^2 entries. Throws
  // Error(kInvalidMatrix) on a size mismatch or duplicate class.
  ExclusivityMatrix(std::vector<std::string> classes,
                    std::vector<NliLabel> cells);

  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  NliLabel at(std::size_t gold, std::size_t hypothesis) const {
    return cells_[gold * classes_.size() + hypothesis];
  }
  // Throws Error(kUnknownClass).
  std::size_t IndexOf(std::string_view cls) const;

  friend bool operator==(const ExclusivityMatrix&,
                         const ExclusivityMatrix&) = default;

 private:
  std::vector<std::string> classes_;
  std::vector<NliLabel> cells_;
};

ExclusivityMatrix BuildMatrix(const DatasetSchema& schema);

// cell(gold, hypothesis); Error(kUnknownClass) if either is not a class.
NliLabel NliTarget(const ExclusivityMatrix& matrix, std::string_view gold,
                   std::string_view hypothesis);

// Ablation without meta-class analysis: contradictions between two positive
// classes become neutral. Negative<->positive contradictions and the
// diagonal are kept. Idempotent.
ExclusivityMatrix DegradeMatrix(const ExclusivityMatrix& matrix,
                                const DatasetSchema& schema);

// Human-readable descriptions of broken invariants (empty when valid):
// entailing diagonal, exactly one entail per row, symmetric contradiction,
// and a fully contradicting negative row/column when the schema has one.
std::vector<std::string> CheckMatrixInvariants(const ExclusivityMatrix& matrix,
                                               const DatasetSchema& schema);

int FixtureCode(NliLabel label);
NliLabel LabelFromFixtureCode(int code);

Json ToFixtureJson(const ExclusivityMatrix& matrix);
ExclusivityMatrix MatrixFromFixtureJson(const Json& j);
ExclusivityMatrix LoadMatrixFixture(const std::filesystem::path& path);

struct CellMismatch {
  std::string gold;
  std::string hypothesis;
  NliLabel expected;
  NliLabel actual;
};

struct MatrixComparison {
  bool same_classes = false;
  std::vector<CellMismatch> mismatches;
  std::size_t cells_compared = 0;

  bool ok() const { return same_classes && mismatches.empty(); }
};

MatrixComparison CompareMatrices(const ExclusivityMatrix& expected,
                                 const ExclusivityMatrix& actual);

}  // namespace re2nli

#endif  // RE2NLI_METACLASS_H_
