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

#include "qdla/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "qdla/error.hpp"
#include "qdla/random.hpp"

namespace qdla {
namespace {

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

void check_rows(Eigen::Index rows, int n, const char* what) {
  if (n > kMaxSimQubits || rows != (Eigen::Index{1} << n)) {
    throw DimensionError(std::string(what) + ": operator on " + std::to_string(n) +
                         " qubits applied to a vector of size " + std::to_string(rows));
  }
}

void rotate(Complex* v, std::size_t dim, std::uint64_t x, std::uint64_t z, double c,
            Complex is) {
  if (x == 0) {
    for (std::size_t b = 0; b < dim; ++b) v[b] *= c + is * parity_sign(z & b);
    return;
  }
  const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & high) continue;
    const std::size_t b2 = b ^ x;
    const Complex a0 = v[b];
    const Complex a1 = v[b2];
    v[b2] = c * a1 + is * parity_sign(z & b) * a0;
    v[b] = c * a0 + is * parity_sign(z & b2) * a1;
  }
}

}  // namespace

Statevector::Statevector(int n) : n_(n) {
  if (n < 1 || n > kMaxSimQubits) {
    throw ResourceError("statevector of " + std::to_string(n) + " qubits exceeds the " +
                        std::to_string(kMaxSimQubits) + "-qubit limit");
  }
  amp_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  amp_[0] = 1.0;
}

Statevector Statevector::basis(int n, std::uint64_t index) {
  Statevector s(n);
  if (index >= s.dim()) throw InvalidInput("basis index out of range");
  s.amp_[0] = 0.0;
  s.amp_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(int n, Eigen::VectorXcd amplitudes) {
  Statevector s(n);
  check_rows(amplitudes.size(), n, "from_amplitudes");
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
    throw InvalidInput("state amplitudes are not normalized");
  }
  s.amp_ = std::move(amplitudes);
  return s;
}

void apply_pauli_rotation(Eigen::Ref<Eigen::MatrixXcd> m, const PauliString& p, double theta) {
  check_rows(m.rows(), p.num_qubits(), "apply_pauli_rotation");
  const Complex is = Complex(0.0, std::sin(theta)) * i_pow(std::popcount(p.x_bits() & p.z_bits()));
  const double c = std::cos(theta);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    rotate(m.col(col).data(), static_cast<std::size_t>(m.rows()), p.x_bits(), p.z_bits(), c, is);
  }
}

void apply_pauli_rotation(Statevector& state, const PauliString& p, double theta) {
  apply_pauli_rotation(Eigen::Ref<Eigen::MatrixXcd>(state.amplitudes()), p, theta);
}

void apply_pauli(Eigen::Ref<Eigen::MatrixXcd> m, const PauliString& p) {
  check_rows(m.rows(), p.num_qubits(), "apply_pauli");
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  const Complex f = i_pow(p.phase() + std::popcount(x & z));
  const std::size_t dim = static_cast<std::size_t>(m.rows());
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Complex* v = m.col(col).data();
    if (x == 0) {
      for (std::size_t b = 0; b < dim; ++b) v[b] *= f * parity_sign(z & b);
      continue;
    }
    const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(x));
    for (std::size_t b = 0; b < dim; ++b) {
      if (b & high) continue;
      const std::size_t b2 = b ^ x;
      const Complex a0 = v[b];
      v[b] = f * parity_sign(z & b2) * v[b2];
      v[b2] = f * parity_sign(z & b) * a0;
    }
  }
}

void apply_pauli(Statevector& state, const PauliString& p) {
  apply_pauli(Eigen::Ref<Eigen::MatrixXcd>(state.amplitudes()), p);
}

Complex pauli_matrix_element(const Eigen::VectorXcd& a, const PauliString& p,
                             const Eigen::VectorXcd& b) {
  check_rows(a.size(), p.num_qubits(), "pauli_matrix_element");
  check_rows(b.size(), p.num_qubits(), "pauli_matrix_element");
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  Complex acc = 0.0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(b.size()); ++i) {
    acc += std::conj(a[static_cast<Eigen::Index>(i ^ x)]) * parity_sign(z & i) *
           b[static_cast<Eigen::Index>(i)];
  }
  return acc * i_pow(p.phase() + std::popcount(x & z));
}

double expectation(const Eigen::VectorXcd& psi, const PauliString& observable) {
  if (!observable.is_hermitian()) {
    throw InvalidInput("observable " + observable.str() + " is not Hermitian");
  }
  return pauli_matrix_element(psi, observable, psi).real();
}

double expectation(const Statevector& state, const PauliString& observable) {
  return expectation(state.amplitudes(), observable);
}

double sample_from_expectation(double exact, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidInput("shot count must be at least 1");
  const double p = std::clamp((1.0 + exact) / 2.0, 0.0, 1.0);
  Rng rng(seed);
  std::binomial_distribution<std::uint64_t> dist(shots, p);
  const auto plus = dist(rng);
  return (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
         static_cast<double>(shots);
}

double sample_expectation(const Statevector& state, const PauliString& observable,
                          std::uint64_t shots, std::uint64_t seed) {
  return sample_from_expectation(expectation(state, observable), shots, seed);
}

std::vector<double> sample_commuting(const Eigen::VectorXcd& psi,
                                     std::span<const PauliString> observables,
                                     std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidInput("shot count must be at least 1");
  const std::size_t m = observables.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!observables[i].is_hermitian()) {
      throw InvalidInput("observable " + observables[i].str() + " is not Hermitian");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(observables[i], observables[j])) {
        throw InvalidInput("jointly measured observables " + observables[j].str() + " and " +
                           observables[i].str() + " anticommute");
      }
    }
  }
  struct Outcome {
    std::uint64_t signs;  // bit i set means eigenvalue -1 for observable i
    double prob;
  };
  std::vector<Outcome> outcomes;
  std::function<void(const Eigen::VectorXcd&, std::size_t, std::uint64_t)> branch =
      [&](const Eigen::VectorXcd& v, std::size_t k, std::uint64_t signs) {
        const double prob = v.squaredNorm();
        if (prob < 1e-14) return;
        if (k == m) {
          outcomes.push_back({signs, prob});
          return;
        }
        Eigen::VectorXcd pv = v;
        apply_pauli(Eigen::Ref<Eigen::MatrixXcd>(pv), observables[k]);
        branch(0.5 * (v + pv), k + 1, signs);
        branch(0.5 * (v - pv), k + 1, signs | (std::uint64_t{1} << k));
      };
  branch(psi, 0, 0);

  Rng rng(seed);
  std::vector<double> sums(m, 0.0);
  double mass = 0.0;
  for (const auto& o : outcomes) mass += o.prob;
  std::uint64_t left = shots;
  for (std::size_t i = 0; i < outcomes.size() && left > 0; ++i) {
    std::uint64_t count = left;
    if (i + 1 < outcomes.size()) {
      const double p = std::clamp(outcomes[i].prob / mass, 0.0, 1.0);
      std::binomial_distribution<std::uint64_t> dist(left, p);
      count = dist(rng);
    }
    mass -= outcomes[i].prob;
    left -= count;
    for (std::size_t j = 0; j < m; ++j) {
      const double s = ((outcomes[i].signs >> j) & 1) ? -1.0 : 1.0;
      sums[j] += s * static_cast<double>(count);
    }
  }
  for (auto& s : sums) s /= static_cast<double>(shots);
  return sums;
}

void apply_gates(const Circuit& circuit, std::span<const double> theta,
                 Eigen::Ref<Eigen::MatrixXcd> m, std::size_t begin, std::size_t end,
                 const std::vector<bool>& flip) {
  if (theta.size() != circuit.num_params()) {
    throw DimensionError("circuit has " + std::to_string(circuit.num_params()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  for (std::size_t j = begin; j < end; ++j) {
    const Gate& g = circuit.gate(j);
    const double t = theta[g.param];
    apply_pauli_rotation(m, g.generator, !flip.empty() && flip[j] ? -t : t);
  }
}

Statevector run_circuit(const Circuit& circuit, std::span<const double> theta,
                        const Statevector& state) {
  if (state.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("state has " + std::to_string(state.num_qubits()) +
                         " qubits, circuit has " + std::to_string(circuit.num_qubits()));
  }
  Statevector out = state;
  apply_gates(circuit, theta, Eigen::Ref<Eigen::MatrixXcd>(out.amplitudes()), 0,
              circuit.num_params());
  return out;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit, std::span<const double> theta) {
  const int n = circuit.num_qubits();
  if (n > kMaxDenseQubits) {
    throw ResourceError("dense unitary of " + std::to_string(n) + " qubits is too large");
  }
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  apply_gates(circuit, theta, u, 0, circuit.num_params());
  return u;
}

Statevector haar_product_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (int k = 0; k < n; ++k) {
    Complex a(normal(rng), normal(rng));
    Complex b(normal(rng), normal(rng));
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    Eigen::VectorXcd next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * a;
      next[2 * i + 1] = v[i] * b;
    }
    v = std::move(next);
  }
  return Statevector::from_amplitudes(n, std::move(v));
}

}  // namespace qdla
