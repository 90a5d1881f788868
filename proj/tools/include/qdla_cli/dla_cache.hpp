// Copyright 2026 The qdla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "qdla/lie.hpp"
#include "qdla/pauli.hpp"

namespace qdla::cli {

/// FNV-1a hash of the comma-joined generator labels, as 16 hex digits.
std::string generator_key(std::span<const PauliString> generators);

/// Lie closure memoized under `cache_dir` (one JSON file per generator
/// list). A missing directory is created; an unreadable or mismatched entry
/// is recomputed and overwritten.
DlaBasis cached_lie_closure(std::span<const PauliString> generators,
                            const std::optional<std::filesystem::path>& cache_dir);

/// The QDLA_CACHE directory, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace qdla::cli
