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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdla/pauli.hpp"

namespace qdla {

enum class AnsatzKind { kCustom, kSA, kSLPA, kNSA, kDE };

std::string to_string(AnsatzKind kind);
/// Accepts "sa", "slpa", "nsa", "de" (case-insensitive) and "custom".
AnsatzKind parse_ansatz_kind(std::string_view name);

struct Gate {
  PauliString generator;  ///< phaseless
  std::size_t param = 0;
};

/// Half-open range of gate indices forming one commuting block.
struct Block {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

/// Ordered product of Pauli rotations exp(i θ_j G_j); gate 0 acts first.
/// Parameter j belongs to gate j. Blocks, when present, partition the gate
/// list into contiguous ranges.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n, AnsatzKind kind = AnsatzKind::kCustom);

  /// Appends a rotation gate; the generator's phase is dropped.
  void add_gate(const PauliString& generator);
  /// Appends the generators as one new block. Mixing blocked and unblocked
  /// appends is rejected.
  void add_block(std::span<const PauliString> generators);

  int num_qubits() const { return n_; }
  AnsatzKind kind() const { return kind_; }
  void set_kind(AnsatzKind kind) { kind_ = kind; }
  std::size_t num_params() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t j) const { return gates_[j]; }
  bool has_blocks() const { return !blocks_.empty(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Block index of gate j; requires has_blocks().
  std::size_t block_of(std::size_t j) const;
  std::vector<PauliString> generators() const;

  /// First `num_gates` gates; a block cut by the truncation is kept partial.
  Circuit truncated(std::size_t num_gates) const;

 private:
  int n_ = 0;
  AnsatzKind kind_ = AnsatzKind::kCustom;
  std::vector<Gate> gates_;
  std::vector<Block> blocks_;
};

}  // namespace qdla
