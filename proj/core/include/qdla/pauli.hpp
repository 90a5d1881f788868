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
#include <functional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qdla {

inline constexpr int kMaxQubits = 64;
inline constexpr int kMaxDenseQubits = 12;

/// An n-qubit Pauli operator i^phase * (P_1 ⊗ ... ⊗ P_n) in symplectic form.
///
/// Qubit k (0-based position in the label, i.e. the leftmost character is
/// qubit 0) is the most significant tensor factor. It is stored at bit
/// (n - 1 - k) of the x/z masks, so the masks double as statevector index
/// masks: the label "XI" has x_bits() == 0b10. Y carries both an X and a Z
/// bit; the operator encoded by (x, z) = (1, 1) is Y itself, not XZ.
class PauliString {
 public:
  PauliString() = default;

  static PauliString identity(int n);
  /// Parses a label over {I, X, Y, Z}. Throws ParseError naming the offending
  /// position.
  static PauliString from_label(std::string_view label);
  static PauliString from_bits(int n, std::uint64_t x, std::uint64_t z,
                               int phase = 0);
  /// Single-qubit operator `op` in {'I','X','Y','Z'} on `qubit`.
  static PauliString single(int n, int qubit, char op);
  /// Two-qubit operator op_a ⊗ op_b on qubits a != b.
  static PauliString pair(int n, int a, int b, char op);

  int num_qubits() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  /// Power of i, in {0, 1, 2, 3}.
  int phase() const { return phase_; }

  char op(int qubit) const;
  /// Label without the phase, e.g. "XIZY".
  std::string label() const;
  /// Label with a phase prefix from {"", "i", "-", "-i"}.
  std::string str() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return phase_ % 2 == 0; }
  PauliString phaseless() const { return from_bits(n_, x_, z_, 0); }
  PauliString with_phase(int phase) const { return from_bits(n_, x_, z_, phase); }
  int weight() const;

  /// Exact operator product, phase tracked mod 4.
  PauliString operator*(const PauliString& rhs) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// True iff the symplectic inner product x_P·z_Q + z_P·x_Q vanishes mod 2.
/// Throws DimensionError on mismatched qubit counts.
bool commutes(const PauliString& p, const PauliString& q);
/// Unchecked variant for hot loops over operands known to share n.
inline bool commutes_unchecked(const PauliString& p, const PauliString& q) {
  return ((__builtin_popcountll(p.x_bits() & q.z_bits()) +
           __builtin_popcountll(p.z_bits() & q.x_bits())) &
          1) == 0;
}

PauliString pauli_product(const PauliString& p, const PauliString& q);
int weight(const PauliString& p);

/// Kronecker product of single-qubit matrices times i^phase. Throws
/// ResourceError above kMaxDenseQubits.
Eigen::MatrixXcd dense_matrix(const PauliString& p);

/// i^k for integer k.
std::complex<double> i_pow(int k);

/// Hash on the phaseless symplectic part; phase is ignored.
struct PhaselessHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};
struct PhaselessEqual {
  bool operator()(const PauliString& a, const PauliString& b) const noexcept {
    return a.num_qubits() == b.num_qubits() && a.x_bits() == b.x_bits() &&
           a.z_bits() == b.z_bits();
  }
};

/// Strict weak order on (n, x, z); phase ignored.
bool phaseless_less(const PauliString& a, const PauliString& b);

}  // namespace qdla
