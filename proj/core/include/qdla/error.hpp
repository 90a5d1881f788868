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

#include <stdexcept>
#include <string>

namespace qdla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (bad labels, anticommuting
/// stabilizers, identity generators, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Textual input that failed to parse.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Operands whose qubit counts or shapes disagree.
class DimensionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A computation that would exceed a configured size or memory cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdla
