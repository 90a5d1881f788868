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


// Independent dense reference implementations used as test oracles. Nothing
// here calls into the library's simulator or Pauli kernels.

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qdla::testing {

using Cd = std::complex<double>;

inline Eigen::Matrix2cd single_qubit(char op) {
  const Cd i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (op) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// Kronecker product of the label's factors, leftmost factor = qubit 0.
inline Eigen::MatrixXcd pauli_kron(const std::string& label) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : label) m = kron(m, single_qubit(c));
  return m;
}

/// exp(i θ P) = cos θ I + i sin θ P for a Pauli label.
inline Eigen::MatrixXcd rotation(const std::string& label, double theta) {
  const Eigen::MatrixXcd p = pauli_kron(label);
  return std::cos(theta) * Eigen::MatrixXcd::Identity(p.rows(), p.cols()) +
         Cd(0.0, std::sin(theta)) * p;
}

/// Product of rotations with the first label acting first.
inline Eigen::MatrixXcd circuit_matrix(const std::vector<std::string>& labels,
                                       std::span<const double> theta) {
  const Eigen::Index dim = Eigen::Index{1} << labels.front().size();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t j = 0; j < labels.size(); ++j) u = rotation(labels[j], theta[j]) * u;
  return u;
}

inline double dense_cost(const std::vector<std::string>& labels, std::span<const double> theta,
                         const Eigen::VectorXcd& psi, const std::string& observable) {
  const Eigen::VectorXcd out = circuit_matrix(labels, theta) * psi;
  return out.dot(pauli_kron(observable) * out).real();
}

inline Eigen::VectorXcd zero_state(int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  v[0] = 1.0;
  return v;
}

}  // namespace qdla::testing
