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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qdla/circuit.hpp"
#include "qdla/pauli.hpp"

namespace qdla {

using Complex = std::complex<double>;

/// Largest register the dense simulator accepts (system plus ancilla).
inline constexpr int kMaxSimQubits = 16;

/// Pure state on n qubits. Basis index bit (n - 1 - k) holds qubit k, so the
/// x/z masks of a PauliString address amplitudes directly.
class Statevector {
 public:
  Statevector() = default;
  /// |0...0>.
  explicit Statevector(int n);
  static Statevector basis(int n, std::uint64_t index);
  /// Takes ownership of the amplitudes; requires size 2^n and unit norm.
  static Statevector from_amplitudes(int n, Eigen::VectorXcd amplitudes);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Eigen::VectorXcd& amplitudes() { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amp_.norm(); }

 private:
  int n_ = 0;
  Eigen::VectorXcd amp_;
};

/// exp(i θ P) applied in place to every column of `m` (a 2^n-row matrix or
/// vector), phase of P ignored. Pairs of basis states are updated together.
void apply_pauli_rotation(Eigen::Ref<Eigen::MatrixXcd> m, const PauliString& p, double theta);
void apply_pauli_rotation(Statevector& state, const PauliString& p, double theta);

/// P (with its phase) applied in place to every column of `m`.
void apply_pauli(Eigen::Ref<Eigen::MatrixXcd> m, const PauliString& p);
void apply_pauli(Statevector& state, const PauliString& p);

/// <a|P|b> for vectors of matching size.
Complex pauli_matrix_element(const Eigen::VectorXcd& a, const PauliString& p,
                             const Eigen::VectorXcd& b);

/// <ψ|O|ψ> for a Hermitian (phase 0 or 2) Pauli.
double expectation(const Statevector& state, const PauliString& observable);
double expectation(const Eigen::VectorXcd& psi, const PauliString& observable);

/// Mean of `shots` ±1 outcomes with P(+1) = (1 + <O>) / 2.
double sample_expectation(const Statevector& state, const PauliString& observable,
                          std::uint64_t shots, std::uint64_t seed);
double sample_from_expectation(double exact, std::uint64_t shots, std::uint64_t seed);

/// Jointly measures pairwise-commuting Hermitian Paulis on `shots` copies of
/// `psi` and returns the sample mean of each one's ±1 outcome. Outcome
/// probabilities come from recursive projection onto joint eigenspaces.
std::vector<double> sample_commuting(const Eigen::VectorXcd& psi,
                                     std::span<const PauliString> observables,
                                     std::uint64_t shots, std::uint64_t seed);

/// Applies gates [begin, end) of `circuit` in ascending order. Gates whose
/// index is set in `flip` (when non-empty) use the negated angle.
void apply_gates(const Circuit& circuit, std::span<const double> theta,
                 Eigen::Ref<Eigen::MatrixXcd> m, std::size_t begin, std::size_t end,
                 const std::vector<bool>& flip = {});

/// U(θ)|ψ>, gate 0 acting first. Throws DimensionError on size mismatches.
Statevector run_circuit(const Circuit& circuit, std::span<const double> theta,
                        const Statevector& state);

/// Dense U(θ); n <= kMaxDenseQubits.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit, std::span<const double> theta);

/// Tensor product of n single-qubit states, each two normalized standard
/// complex Gaussian amplitudes.
Statevector haar_product_state(int n, std::uint64_t seed);

}  // namespace qdla
