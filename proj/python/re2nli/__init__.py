# Copyright 2026 The re2nli Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Relation extraction to NLI conversion and scoring.

Records are plain dicts shaped like the JSONL files the CLI reads and writes.
Errors raise ``re2nli.Error`` (a ``ValueError``) with a ``kind`` attribute.
"""

import os as _os

# Installed wheels carry the schema packs next to the module.
_pkg_data = _os.path.join(_os.path.dirname(__file__), "data")
if _os.path.isdir(_pkg_data):
    _os.environ.setdefault("RE2NLI_DATA_DIR", _pkg_data)

from ._re2nli import (  # noqa: E402
    Error,
    adapt,
    build_index,
    build_matrix,
    build_premise,
    bundled_schemas,
    evaluate,
    fill_hypothesis,
    load_schema,
    parse_nli_label,
    select,
    validate_split,
    verify_matrix,
)

__all__ = [
    "Error",
    "adapt",
    "build_index",
    "build_matrix",
    "build_premise",
    "bundled_schemas",
    "evaluate",
    "fill_hypothesis",
    "load_schema",
    "parse_nli_label",
    "select",
    "validate_split",
    "verify_matrix",
]
