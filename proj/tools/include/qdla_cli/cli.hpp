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

#include <iosfwd>
#include <span>
#include <string>

namespace qdla::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitResource = 2;

/// Parses argv (program name first) and runs one subcommand: dla, feff,
/// build-slpa, grad-check, train, qpr, bp-scan or verify. Results go to
/// `out` unless --output names a directory; diagnostics go to `err`.
/// Returns 0 on success, 1 on invalid input or a failed check and 2 on
/// resource or I/O errors.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qdla::cli
