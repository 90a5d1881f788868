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

#include <Eigen/Dense>

#include "qdla/simulator.hpp"

namespace qdla {

/// Dense Hermitian matrix, validated on construction.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  /// Throws InvalidInput when `matrix` is not square or deviates from its
  /// adjoint by more than `tolerance` (relative to its largest entry).
  explicit HermitianOperator(Eigen::MatrixXcd matrix, double tolerance = 1e-12);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Bond-alternating XXZ chain with open ends: unit-strength bonds on qubit
/// pairs (0,1), (2,3), ... and strength `j_inter` on (1,2), (3,4), ...; each
/// bond is XX + YY + delta ZZ. Requires even n in [2, 10].
HermitianOperator xxz_hamiltonian(int n, double j_inter, double delta);

struct Eigensystem {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXcd vectors; ///< column k pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization; stops once the off-diagonal Frobenius norm
/// drops below tolerance * max(1, ||A||_F).
Eigensystem jacobi_eigensystem(const Eigen::MatrixXcd& a, double tolerance = 1e-10,
                               int max_sweeps = 64);

struct GroundState {
  double energy = 0.0;
  Statevector state;
};

/// Lowest eigenpair. The matrix is first split into blocks that its nonzero
/// pattern leaves decoupled, each diagonalized by jacobi_eigensystem; among
/// degenerate minima the first block wins. Requires dim = 2^n <= 1024.
GroundState ground_state(const HermitianOperator& h);

}  // namespace qdla
