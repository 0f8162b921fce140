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

#include "re2nli/metaclass.h"

#include <algorithm>
#include <set>
#include <utility>

#include "re2nli/error.h"

namespace re2nli {

ExclusivityMatrix::ExclusivityMatrix(std::vector<std::string> classes,
                                     std::vector<NliLabel> cells)
    : classes_(std::move(classes)), cells_(std::move(cells)) {
  if (cells_.size() != classes_.size() * classes_.size()) {
    throw Error(ErrorKind::kInvalidMatrix,
                "matrix over " + std::to_string(classes_.size()) +
                    " classes needs " +
                    std::to_string(classes_.size() * classes_.size()) +
                    " cells, got " + std::to_string(cells_.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& cls : classes_) {
    if (!seen.insert(cls).second) {
      throw Error(ErrorKind::kInvalidMatrix, "duplicate class '" + cls + "'");
    }
  }
}

std::size_t ExclusivityMatrix::IndexOf(std::string_view cls) const {
  auto it = std::find(classes_.begin(), classes_.end(), cls);
  if (it == classes_.end()) {
    throw Error(ErrorKind::kUnknownClass,
                "class '" + std::string(cls) + "' is not in the matrix");
  }
  return static_cast<std::size_t>(it - classes_.begin());
}

ExclusivityMatrix BuildMatrix(const DatasetSchema& schema) {
  const std::size_t m = schema.size();
  std::vector<NliLabel> cells(m * m, NliLabel::kNeutral);
  auto set = [&](std::size_t g, std::size_t h, NliLabel label) {
    cells[g * m + h] = label;
  };
  for (const auto& clique : schema.exclusivity_cliques()) {
    for (const auto& a : clique) {
      for (const auto& b : clique) {
        set(*schema.IndexOf(a), *schema.IndexOf(b), NliLabel::kContradict);
      }
    }
  }
  if (const auto& negative = schema.negative_class()) {
    const std::size_t n = *schema.IndexOf(*negative);
    for (std::size_t i = 0; i < m; ++i) {
      set(n, i, NliLabel::kContradict);
      set(i, n, NliLabel::kContradict);
    }
  }
  for (std::size_t i = 0; i < m; ++i) set(i, i, NliLabel::kEntail);
  return ExclusivityMatrix(schema.classes(), std::move(cells));
}

NliLabel NliTarget(const ExclusivityMatrix& matrix, std::string_view gold,
                   std::string_view hypothesis) {
  return matrix.at(matrix.IndexOf(gold), matrix.IndexOf(hypothesis));
}

ExclusivityMatrix DegradeMatrix(const ExclusivityMatrix& matrix,
                                const DatasetSchema& schema) {
  const std::size_t m = matrix.size();
  std::vector<NliLabel> cells;
  cells.reserve(m * m);
  for (std::size_t g = 0; g < m; ++g) {
    const bool gold_negative = schema.IsNegative(matrix.classes()[g]);
    for (std::size_t h = 0; h < m; ++h) {
      NliLabel label = matrix.at(g, h);
      const bool involves_negative =
          gold_negative || schema.IsNegative(matrix.classes()[h]);
      if (g != h && label == NliLabel::kContradict && !involves_negative) {
        label = NliLabel::kNeutral;
      }
      cells.push_back(label);
    }
  }
  return ExclusivityMatrix(matrix.classes(), std::move(cells));
}

std::vector<std::string> CheckMatrixInvariants(const ExclusivityMatrix& matrix,
                                               const DatasetSchema& schema) {
  std::vector<std::string> problems;
  const std::size_t m = matrix.size();
  const auto& cls = matrix.classes();
  if (cls != schema.classes()) {
    problems.push_back("matrix classes differ from schema classes");
    return problems;
  }
  for (std::size_t g = 0; g < m; ++g) {
    if (matrix.at(g, g) != NliLabel::kEntail) {
      problems.push_back("diagonal cell for '" + cls[g] + "' is not entail");
    }
    std::size_t entails = 0;
    for (std::size_t h = 0; h < m; ++h) {
      if (matrix.at(g, h) == NliLabel::kEntail) ++entails;
      const bool forward = matrix.at(g, h) == NliLabel::kContradict;
      const bool backward = matrix.at(h, g) == NliLabel::kContradict;
      if (g < h && forward != backward) {
        problems.push_back("contradiction between '" + cls[g] + "' and '" +
                           cls[h] + "' is not symmetric");
      }
    }
    if (entails != 1) {
      problems.push_back("row '" + cls[g] + "' has " +
                         std::to_string(entails) + " entail cells");
    }
  }
  if (const auto& negative = schema.negative_class()) {
    const std::size_t n = matrix.IndexOf(*negative);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == n) continue;
      if (matrix.at(n, i) != NliLabel::kContradict ||
          matrix.at(i, n) != NliLabel::kContradict) {
        problems.push_back("negative class '" + *negative +
                           "' does not contradict '" + cls[i] + "'");
      }
    }
  }
  return problems;
}

int FixtureCode(NliLabel label) {
  switch (label) {
    case NliLabel::kContradict: return 0;
    case NliLabel::kNeutral: return 1;
    case NliLabel::kEntail: return 2;
  }
  return 1;
}

NliLabel LabelFromFixtureCode(int code) {
  switch (code) {
    case 0: return NliLabel::kContradict;
    case 1: return NliLabel::kNeutral;
    case 2: return NliLabel::kEntail;
    default:
      throw Error(ErrorKind::kInvalidMatrix,
                  "fixture cell code must be 0, 1 or 2, got " +
                      std::to_string(code));
  }
}

Json ToFixtureJson(const ExclusivityMatrix& matrix) {
  Json rows = Json::array();
  for (std::size_t g = 0; g < matrix.size(); ++g) {
    Json row = Json::array();
    for (std::size_t h = 0; h < matrix.size(); ++h) {
      row.push_back(FixtureCode(matrix.at(g, h)));
    }
    rows.push_back(std::move(row));
  }
  Json j;
  j["classes"] = matrix.classes();
  j["cells"] = std::move(rows);
  return j;
}

ExclusivityMatrix MatrixFromFixtureJson(const Json& j) {
  if (!j.is_object() || !j.contains("classes") || !j.contains("cells") ||
      !j["classes"].is_array() || !j["cells"].is_array()) {
    throw Error(ErrorKind::kInvalidMatrix,
                "fixture needs 'classes' and 'cells' arrays");
  }
  std::vector<std::string> classes;
  for (const Json& c : j["classes"]) {
    if (!c.is_string()) {
      throw Error(ErrorKind::kInvalidMatrix, "fixture classes must be strings");
    }
    classes.push_back(c.get<std::string>());
  }
  const std::size_t m = classes.size();
  if (j["cells"].size() != m) {
    throw Error(ErrorKind::kInvalidMatrix, "fixture needs one row per class");
  }
  std::vector<NliLabel> cells;
  cells.reserve(m * m);
  for (const Json& row : j["cells"]) {
    if (!row.is_array() || row.size() != m) {
      throw Error(ErrorKind::kInvalidMatrix,
                  "every fixture row needs one cell per class");
    }
    for (const Json& cell : row) {
      if (!cell.is_number_integer()) {
        throw Error(ErrorKind::kInvalidMatrix, "fixture cells must be integers");
      }
      cells.push_back(LabelFromFixtureCode(cell.get<int>()));
    }
  }
  return ExclusivityMatrix(std::move(classes), std::move(cells));
}

ExclusivityMatrix LoadMatrixFixture(const std::filesystem::path& path) {
  return MatrixFromFixtureJson(ReadJsonFile(path));
}

MatrixComparison CompareMatrices(const ExclusivityMatrix& expected,
                                 const ExclusivityMatrix& actual) {
  MatrixComparison result;
  result.same_classes = expected.classes() == actual.classes();
  if (!result.same_classes) return result;
  const std::size_t m = expected.size();
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      ++result.cells_compared;
      if (expected.at(g, h) != actual.at(g, h)) {
        result.mismatches.push_back({expected.classes()[g],
                                     expected.classes()[h], expected.at(g, h),
                                     actual.at(g, h)});
      }
    }
  }
  return result;
}

}  // namespace re2nli
