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

#include "qdla/ansatz.hpp"

#include <array>
#include <string>

#include "qdla/error.hpp"

namespace qdla {
namespace {

void require_even(AnsatzKind kind, int n, int min_n) {
  if (n < min_n || n % 2 != 0) {
    throw InvalidInput(to_string(kind) + " ansatz needs an even qubit count >= " +
                       std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

char cycle_op(int mu) {
  constexpr std::array<char, 3> ops = {'Z', 'X', 'Y'};
  return ops[static_cast<std::size_t>(mu % 3)];
}

}  // namespace

StabilizerGroup parity_group(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("parity group needs an even qubit count, got " + std::to_string(n));
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::array<PauliString, 2> gens = {PauliString::from_bits(n, all, 0),
                                           PauliString::from_bits(n, 0, all)};
  return stabilizer_closure(n, gens);
}

std::vector<PauliString> sa_layer(int n) {
  require_even(AnsatzKind::kSA, n, 4);
  std::vector<PauliString> gates;
  const int half = n / 2;
  for (int a = 0; a < 3; ++a) {
    for (int b = 1; b <= half; ++b) {
      gates.push_back(PauliString::pair(n, 2 * b - 2, 2 * b - 1, cycle_op(a + b)));
    }
    for (int b = 1; b <= half; ++b) {
      gates.push_back(PauliString::pair(n, 2 * b - 1, (2 * b) % n, cycle_op(a + b + half)));
    }
  }
  return gates;
}

std::size_t gates_per_layer(AnsatzKind kind, int n) {
  switch (kind) {
    case AnsatzKind::kSA:
    case AnsatzKind::kNSA: return static_cast<std::size_t>(3 * n);
    case AnsatzKind::kSLPA: return static_cast<std::size_t>(12 * n);
    case AnsatzKind::kDE: return 10;
    case AnsatzKind::kCustom: break;
  }
  throw InvalidInput("custom circuits have no layer structure");
}

Circuit build_ansatz(AnsatzKind kind, int n, int layers) {
  if (layers < 1) throw InvalidInput("ansatz needs at least one layer");
  Circuit c(n, kind);
  switch (kind) {
    case AnsatzKind::kSA: {
      const auto layer = sa_layer(n);
      for (int d = 0; d < layers; ++d) {
        for (const auto& g : layer) c.add_gate(g);
      }
      break;
    }
    case AnsatzKind::kSLPA: {
      const auto layer = sa_layer(n);
      const StabilizerGroup group = parity_group(n);
      c = build_slpa(group, layer, layers);
      break;
    }
    case AnsatzKind::kNSA: {
      if (n < 3) throw InvalidInput("nsa ansatz needs at least 3 qubits");
      for (int d = 0; d < layers; ++d) {
        for (int j = 0; j < n; ++j) {
          c.add_gate(PauliString::single(n, j, 'X'));
          c.add_gate(PauliString::single(n, j, 'Y'));
        }
        for (int j = 0; j < n; ++j) c.add_gate(PauliString::pair(n, j, (j + 1) % n, 'Z'));
      }
      break;
    }
    case AnsatzKind::kDE: {
      if (n != 4) throw InvalidInput("de ansatz is defined for n = 4, got " + std::to_string(n));
      for (int d = 0; d < layers; ++d) {
        for (int h = 0; h < 4; h += 2) {
          c.add_gate(PauliString::single(n, h, 'X'));
          c.add_gate(PauliString::single(n, h + 1, 'X'));
          c.add_gate(PauliString::single(n, h, 'Y'));
          c.add_gate(PauliString::single(n, h + 1, 'Y'));
          c.add_gate(PauliString::pair(n, h, h + 1, 'Z'));
        }
      }
      break;
    }
    case AnsatzKind::kCustom:
      throw InvalidInput("custom circuits cannot be built from an ansatz name");
  }
  return c;
}

Circuit build_ansatz_gates(AnsatzKind kind, int n, std::size_t num_gates) {
  if (num_gates == 0) throw InvalidInput("ansatz needs at least one gate");
  const std::size_t per = gates_per_layer(kind, n);
  const int layers = static_cast<int>((num_gates + per - 1) / per);
  return build_ansatz(kind, n, layers).truncated(num_gates);
}

PauliString default_observable(AnsatzKind kind, int n) {
  if (kind == AnsatzKind::kDE) return PauliString::pair(n, 1, 2, 'X');
  if (n < 2) throw InvalidInput("default observable needs at least 2 qubits");
  return PauliString::pair(n, 0, 1, 'X');
}

}  // namespace qdla
