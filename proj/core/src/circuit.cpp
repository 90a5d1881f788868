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

#include "qdla/circuit.hpp"

#include <algorithm>
#include <cctype>

#include "qdla/error.hpp"

namespace qdla {

std::string to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::kSA: return "sa";
    case AnsatzKind::kSLPA: return "slpa";
    case AnsatzKind::kNSA: return "nsa";
    case AnsatzKind::kDE: return "de";
    case AnsatzKind::kCustom: break;
  }
  return "custom";
}

AnsatzKind parse_ansatz_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sa") return AnsatzKind::kSA;
  if (lower == "slpa") return AnsatzKind::kSLPA;
  if (lower == "nsa") return AnsatzKind::kNSA;
  if (lower == "de" || lower == "disentangled") return AnsatzKind::kDE;
  if (lower == "custom") return AnsatzKind::kCustom;
  throw InvalidInput("unknown ansatz kind \"" + std::string(name) +
                     "\" (expected sa, slpa, nsa or de)");
}

Circuit::Circuit(int n, AnsatzKind kind) : n_(n), kind_(kind) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("circuit qubit count " + std::to_string(n) + " out of range");
  }
}

void Circuit::add_gate(const PauliString& generator) {
  if (generator.num_qubits() != n_) {
    throw DimensionError("gate acts on " + std::to_string(generator.num_qubits()) +
                         " qubits, circuit has " + std::to_string(n_));
  }
  if (has_blocks()) {
    throw InvalidInput("cannot append an unblocked gate to a blocked circuit");
  }
  gates_.push_back({generator.phaseless(), gates_.size()});
}

void Circuit::add_block(std::span<const PauliString> generators) {
  if (generators.empty()) {
    throw InvalidInput("a block needs at least one gate");
  }
  if (!gates_.empty() && !has_blocks()) {
    throw InvalidInput("cannot append a block to an unblocked circuit");
  }
  for (const auto& g : generators) {
    if (g.num_qubits() != n_) {
      throw DimensionError("gate acts on " + std::to_string(g.num_qubits()) +
                           " qubits, circuit has " + std::to_string(n_));
    }
  }
  Block block{gates_.size(), gates_.size() + generators.size()};
  for (const auto& g : generators) gates_.push_back({g.phaseless(), gates_.size()});
  blocks_.push_back(block);
}

std::size_t Circuit::block_of(std::size_t j) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), j,
                             [](std::size_t v, const Block& b) { return v < b.end; });
  if (it == blocks_.end() || j < it->begin) {
    throw InvalidInput("gate " + std::to_string(j) + " is not in any block");
  }
  return static_cast<std::size_t>(it - blocks_.begin());
}

std::vector<PauliString> Circuit::generators() const {
  std::vector<PauliString> out;
  out.reserve(gates_.size());
  for (const auto& g : gates_) out.push_back(g.generator);
  return out;
}

Circuit Circuit::truncated(std::size_t num_gates) const {
  if (num_gates > gates_.size()) {
    throw InvalidInput("cannot truncate a " + std::to_string(gates_.size()) +
                       "-gate circuit to " + std::to_string(num_gates) + " gates");
  }
  Circuit out(n_, kind_);
  out.gates_.assign(gates_.begin(), gates_.begin() + static_cast<std::ptrdiff_t>(num_gates));
  for (const auto& b : blocks_) {
    if (b.begin >= num_gates) break;
    out.blocks_.push_back({b.begin, std::min(b.end, num_gates)});
  }
  return out;
}

}  // namespace qdla
