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
#include <vector>

#include "qdla/circuit.hpp"
#include "qdla/pauli.hpp"
#include "qdla/stabilizer.hpp"

namespace qdla {

/// {I, X...X, Y...Y, Z...Z}: the global parity group generated by X...X and
/// Z...Z. Requires even n.
StabilizerGroup parity_group(int n);

/// One layer of the symmetric ansatz: XX, YY and ZZ on every bond of the
/// periodic chain, 3n gates. The Pauli type on a bond cycles with the bond
/// index, so consecutive gates never repeat a type. Requires even n >= 4.
std::vector<PauliString> sa_layer(int n);

/// Gates per layer: SA and NSA 3n, SLPA 12n, DE 10.
std::size_t gates_per_layer(AnsatzKind kind, int n);

/// Ansatz circuits with `layers` repetitions:
///  - SA: sa_layer(n) repeated.
///  - SLPA: every SA gate lifted to a block {S L : S in parity_group(n)}.
///  - NSA: X_j then Y_j on every qubit, then Z_j Z_{j+1} on the periodic chain.
///  - DE (n = 4): X, X, Y, Y and ZZ rotations on qubits (0, 1), then the same
///    on (2, 3).
Circuit build_ansatz(AnsatzKind kind, int n, int layers);

/// The smallest number of layers holding `num_gates` gates, truncated to
/// exactly that many gates.
Circuit build_ansatz_gates(AnsatzKind kind, int n, std::size_t num_gates);

/// X on qubits 0 and 1, or on qubits 1 and 2 for DE (an observable spanning
/// both halves).
PauliString default_observable(AnsatzKind kind, int n);

}  // namespace qdla
