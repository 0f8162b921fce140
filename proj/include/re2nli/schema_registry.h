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

#ifndef RE2NLI_SCHEMA_REGISTRY_H_
#define RE2NLI_SCHEMA_REGISTRY_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "re2nli/core_model.h"

namespace re2nli {

// Names of the bundled schema packs, in the order they are documented.
const std::vector<std::string>& BundledSchemaNames();

// $RE2NLI_DATA_DIR if set, else the data directory compiled into the build.
std::filesystem::path DefaultDataDir();

// `name_or_path` is either an existing file or the name of a bundled pack
// looked up as <data_dir>/schemas/<name>.json. An empty `data_dir` means
// DefaultDataDir().
DatasetSchema LoadSchema(const std::filesystem::path& path);
DatasetSchema ResolveSchema(std::string_view name_or_path,
                            const std::filesystem::path& data_dir = {});

// <data_dir>/matrices/<schema name>.json
std::filesystem::path FixturePathFor(std::string_view schema_name,
                                     const std::filesystem::path& data_dir = {});

}  // namespace re2nli

#endif  // RE2NLI_SCHEMA_REGISTRY_H_
