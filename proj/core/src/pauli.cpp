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

#include "qdla/pauli.hpp"

#include <bit>

#include "qdla/error.hpp"

namespace qdla {
namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) +
                         " outside [0, " + std::to_string(kMaxQubits) + "]");
  }
}

std::uint64_t bit_of(int n, int qubit) {
  return std::uint64_t{1} << (n - 1 - qubit);
}

void check_same_n(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("Pauli operands act on " +
                         std::to_string(p.num_qubits()) + " and " +
                         std::to_string(q.num_qubits()) + " qubits");
  }
}

}  // namespace

std::complex<double> i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString PauliString::identity(int n) { return from_bits(n, 0, 0, 0); }

PauliString PauliString::from_bits(int n, std::uint64_t x, std::uint64_t z,
                                   int phase) {
  check_n(n);
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1;
  if ((x & ~mask) != 0 || (z & ~mask) != 0) {
    throw DimensionError("bit mask wider than " + std::to_string(n) +
                         " qubits");
  }
  PauliString p;
  p.n_ = n;
  p.x_ = x;
  p.z_ = z;
  p.phase_ = ((phase % 4) + 4) % 4;
  return p;
}

PauliString PauliString::from_label(std::string_view label) {
  if (label.empty()) {
    throw ParseError("empty Pauli label");
  }
  const int n = static_cast<int>(label.size());
  check_n(n);
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t b = bit_of(n, k);
    switch (label[k]) {
      case 'I': break;
      case 'X': x |= b; break;
      case 'Y': x |= b; z |= b; break;
      case 'Z': z |= b; break;
      default:
        throw ParseError("invalid Pauli character '" +
                         std::string(1, label[k]) + "' at position " +
                         std::to_string(k) + " in \"" + std::string(label) +
                         "\"");
    }
  }
  return from_bits(n, x, z, 0);
}

PauliString PauliString::single(int n, int qubit, char op) {
  check_n(n);
  if (qubit < 0 || qubit >= n) {
    throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
  }
  std::string label(static_cast<std::size_t>(n), 'I');
  label[static_cast<std::size_t>(qubit)] = op;
  return from_label(label);
}

PauliString PauliString::pair(int n, int a, int b, char op) {
  if (a == b) {
    throw InvalidInput("two-qubit Pauli needs distinct qubits");
  }
  return single(n, a, op) * single(n, b, op);
}

char PauliString::op(int qubit) const {
  const std::uint64_t b = bit_of(n_, qubit);
  const bool xb = (x_ & b) != 0;
  const bool zb = (z_ & b) != 0;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::label() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(k)] = op(k);
  return out;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  return kPrefix[phase_] + label();
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

PauliString PauliString::operator*(const PauliString& rhs) const {
  check_same_n(*this, rhs);
  // Write each factor as i^{x·z} X^x Z^z, move Z^{z1} past X^{x2} (sign
  // (-1)^{z1·x2}) and re-absorb i^{-x3·z3} for the result.
  const std::uint64_t x3 = x_ ^ rhs.x_;
  const std::uint64_t z3 = z_ ^ rhs.z_;
  const int e = phase_ + rhs.phase_ + std::popcount(x_ & z_) +
                std::popcount(rhs.x_ & rhs.z_) +
                2 * std::popcount(z_ & rhs.x_) - std::popcount(x3 & z3);
  return from_bits(n_, x3, z3, e);
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_n(p, q);
  return commutes_unchecked(p, q);
}

PauliString pauli_product(const PauliString& p, const PauliString& q) {
  return p * q;
}

int weight(const PauliString& p) { return p.weight(); }

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  const int n = p.num_qubits();
  if (n > kMaxDenseQubits) {
    throw ResourceError("dense matrix of a " + std::to_string(n) +
                        "-qubit Pauli exceeds the " +
                        std::to_string(kMaxDenseQubits) + "-qubit limit");
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  const int base = p.phase() + std::popcount(x & z);
  for (std::size_t col = 0; col < dim; ++col) {
    const int sign = std::popcount(z & col) & 1;
    m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) =
        i_pow(base + 2 * sign);
  }
  return m;
}

std::size_t PhaselessHash::operator()(const PauliString& p) const noexcept {
  std::uint64_t h = p.x_bits() * 0x9E3779B97F4A7C15ull;
  h ^= p.z_bits() + 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
  h ^= static_cast<std::uint64_t>(p.num_qubits()) << 57;
  return static_cast<std::size_t>(h);
}

bool phaseless_less(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) return a.num_qubits() < b.num_qubits();
  if (a.x_bits() != b.x_bits()) return a.x_bits() < b.x_bits();
  return a.z_bits() < b.z_bits();
}

}  // namespace qdla
