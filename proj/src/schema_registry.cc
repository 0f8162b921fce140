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

#include "re2nli/schema_registry.h"

#include <cstdlib>

#include "re2nli/error.h"
#include "re2nli/json_io.h"

#ifndef RE2NLI_DEFAULT_DATA_DIR
#define RE2NLI_DEFAULT_DATA_DIR "data"
#endif

namespace re2nli {

namespace fs = std::filesystem;

const std::vector<std::string>& BundledSchemaNames() {
  static const std::vector<std::string> kNames = {
      "bc5cdr", "biored", "biored_novel", "chemprot",
      "ddi13",  "gad",    "retacred",     "semeval"};
  return kNames;
}

fs::path DefaultDataDir() {
  if (const char* env = std::getenv("RE2NLI_DATA_DIR"); env && *env) {
    return fs::path(env);
  }
  return fs::path(RE2NLI_DEFAULT_DATA_DIR);
}

DatasetSchema LoadSchema(const fs::path& path) {
  try {
    return DatasetSchemaFromJson(ReadJsonFile(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(ErrorKind::kInvalidSchema,
                "'" + path.string() + "': " + e.what());
  }
}

DatasetSchema ResolveSchema(std::string_view name_or_path,
                            const fs::path& data_dir) {
  const fs::path as_path(name_or_path);
  std::error_code ec;
  if (fs::is_regular_file(as_path, ec)) return LoadSchema(as_path);

  const fs::path dir = data_dir.empty() ? DefaultDataDir() : data_dir;
  const fs::path bundled =
      dir / "schemas" / (std::string(name_or_path) + ".json");
  if (!fs::is_regular_file(bundled, ec)) {
    throw Error(ErrorKind::kIo, "no schema file or bundled pack named '" +
                                    std::string(name_or_path) + "' (looked in " +
                                    bundled.string() + ")");
  }
  return LoadSchema(bundled);
}

fs::path FixturePathFor(std::string_view schema_name, const fs::path& data_dir) {
  const fs::path dir = data_dir.empty() ? DefaultDataDir() : data_dir;
  return dir / "matrices" / (std::string(schema_name) + ".json");
}

}  // namespace re2nli
