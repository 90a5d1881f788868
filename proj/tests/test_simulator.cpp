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


#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"
#include "qdla/simulator.hpp"

namespace qdla {
namespace {

using testing::pauli_kron;
using testing::rotation;

std::string random_label(std::mt19937_64& rng, int n) {
  static constexpr char kOps[] = "IXYZ";
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (int k = 0; k < n; ++k) s += kOps[pick(rng)];
  return s;
}

Eigen::VectorXcd random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& a : v) a = {g(rng), g(rng)};
  return v / v.norm();
}

TEST(Statevector, Construction) {
  Statevector s(3);
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_EQ(s[0], std::complex<double>(1, 0));
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
  EXPECT_EQ(Statevector::basis(3, 5)[5], std::complex<double>(1, 0));
  EXPECT_THROW(Statevector::basis(3, 8), InvalidInput);
  EXPECT_THROW(Statevector::from_amplitudes(1, Eigen::VectorXcd::Ones(2)), InvalidInput);
  EXPECT_THROW(Statevector::from_amplitudes(2, Eigen::VectorXcd::Ones(2) / std::sqrt(2.0)),
               DimensionError);
  EXPECT_THROW(Statevector(kMaxSimQubits + 1), ResourceError);
}

TEST(Simulator, RotationMatchesDenseExponential) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    const auto label = random_label(rng, n);
    const double theta = angle(rng);
    const Eigen::VectorXcd v = random_vector(rng, n);
    Eigen::MatrixXcd m = v;
    apply_pauli_rotation(m, PauliString::from_label(label), theta);
    EXPECT_TRUE(m.col(0).isApprox(rotation(label, theta) * v, 1e-12)) << label;
  }
}

TEST(Simulator, RotationActsOnEveryColumn) {
  std::mt19937_64 rng(2);
  const auto label = std::string("XYZ");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  apply_pauli_rotation(m, PauliString::from_label(label), 0.37);
  EXPECT_TRUE(m.isApprox(rotation(label, 0.37), 1e-13));
}

TEST(Simulator, PauliApplicationIncludesPhase) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    const auto label = random_label(rng, n);
    const auto p = PauliString::from_label(label).with_phase(trial % 4);
    Statevector s = Statevector::from_amplitudes(n, random_vector(rng, n));
    const Eigen::VectorXcd before = s.amplitudes();
    apply_pauli(s, p);
    EXPECT_TRUE(s.amplitudes().isApprox(i_pow(trial % 4) * pauli_kron(label) * before, 1e-13));
  }
}

TEST(Simulator, ExpectationAndMatrixElements) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const auto label = random_label(rng, n);
    const Eigen::VectorXcd a = random_vector(rng, n);
    const Eigen::VectorXcd b = random_vector(rng, n);
    const auto p = PauliString::from_label(label);
    const Eigen::MatrixXcd dense = pauli_kron(label);
    EXPECT_NEAR(expectation(a, p), a.dot(dense * a).real(), 1e-12);
    EXPECT_NEAR(std::abs(pauli_matrix_element(a, p, b) - a.dot(dense * b)), 0.0, 1e-12);
    EXPECT_NEAR(expectation(a, p.with_phase(2)), -a.dot(dense * a).real(), 1e-12);
  }
  EXPECT_THROW(expectation(Statevector(2), PauliString::from_label("XY").with_phase(1)),
               InvalidInput);
  EXPECT_THROW(expectation(Statevector(2), PauliString::from_label("XYZ")), DimensionError);
}

TEST(Simulator, RunCircuitMatchesDenseProduct) {
  const auto c = build_ansatz_gates(AnsatzKind::kNSA, 4, 20);
  std::vector<std::string> labels;
  for (const auto& g : c.gates()) labels.push_back(g.generator.label());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<double> theta(c.num_params());
  for (auto& t : theta) t = angle(rng);
  const auto oracle = testing::circuit_matrix(labels, theta);
  EXPECT_TRUE(circuit_unitary(c, theta).isApprox(oracle, 1e-12));
  const auto psi = haar_product_state(4, 9);
  EXPECT_TRUE(run_circuit(c, theta, psi).amplitudes().isApprox(oracle * psi.amplitudes(), 1e-12));
  std::vector<double> short_theta(3);
  EXPECT_THROW(run_circuit(c, short_theta, psi), DimensionError);
}

TEST(Simulator, ApplyGatesRangeAndFlip) {
  const auto c = build_ansatz_gates(AnsatzKind::kSA, 4, 12);
  std::vector<double> theta(12);
  for (std::size_t j = 0; j < 12; ++j) theta[j] = 0.1 * static_cast<double>(j + 1);
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(16, 16);
  apply_gates(c, theta, full, 0, 12);
  Eigen::MatrixXcd split = Eigen::MatrixXcd::Identity(16, 16);
  apply_gates(c, theta, split, 0, 5);
  apply_gates(c, theta, split, 5, 12);
  EXPECT_TRUE(full.isApprox(split, 1e-13));
  std::vector<bool> flip(12, false);
  flip[3] = true;
  std::vector<double> negated = theta;
  negated[3] = -negated[3];
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(16, 16);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(16, 16);
  apply_gates(c, theta, a, 0, 12, flip);
  apply_gates(c, negated, b, 0, 12);
  EXPECT_TRUE(a.isApprox(b, 1e-13));
}

TEST(Simulator, HaarProductStateIsNormalizedProduct) {
  const auto s = haar_product_state(3, 17);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  // A product state has a rank-one reduced matrix across every cut.
  Eigen::Map<const Eigen::MatrixXcd> m(s.amplitudes().data(), 4, 2);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  EXPECT_LT(svd.singularValues()[1], 1e-12);
  EXPECT_FALSE(haar_product_state(3, 18).amplitudes().isApprox(s.amplitudes()));
}

TEST(Sampling, BinomialMeanAndSpread) {
  const double exact = 0.3;
  const std::uint64_t shots = 1000;
  double sum = 0.0, sq = 0.0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    const double x = sample_from_expectation(exact, shots, static_cast<std::uint64_t>(r));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / reps;
  const double var = sq / reps - mean * mean;
  const double expected_var = (1.0 - exact * exact) / static_cast<double>(shots);
  EXPECT_NEAR(mean, exact, 5.0 * std::sqrt(expected_var / reps));
  EXPECT_NEAR(var / expected_var, 1.0, 0.25);
  EXPECT_EQ(sample_from_expectation(1.0, 10, 1), 1.0);
  EXPECT_EQ(sample_from_expectation(0.3, 100, 5), sample_from_expectation(0.3, 100, 5));
  EXPECT_THROW(sample_from_expectation(0.3, 0, 1), InvalidInput);
}

TEST(Sampling, CommutingObservablesAreJointlyConsistent) {
  std::mt19937_64 rng(7);
  const Eigen::VectorXcd psi = random_vector(rng, 3);
  const std::vector<PauliString> obs = {PauliString::from_label("ZZI"),
                                        PauliString::from_label("IZZ"),
                                        PauliString::from_label("ZIZ")};
  const std::uint64_t shots = 20000;
  const auto est = sample_commuting(psi, obs, shots, 3);
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double exact = expectation(psi, obs[i]);
    EXPECT_NEAR(est[i], exact, 5.0 * std::sqrt((1.0 - exact * exact) / shots) + 1e-12);
  }
  // Single-shot outcomes must satisfy ZIZ = ZZI * IZZ exactly.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto one = sample_commuting(psi, obs, 1, seed);
    EXPECT_DOUBLE_EQ(one[2], one[0] * one[1]);
  }
  const std::vector<PauliString> clash = {PauliString::from_label("XII"),
                                          PauliString::from_label("ZII")};
  EXPECT_THROW(sample_commuting(psi, clash, 10, 1), InvalidInput);
}

TEST(Sampling, SampleExpectationIsUnbiased) {
  Statevector s = haar_product_state(2, 4);
  const auto o = PauliString::from_label("XZ");
  const double exact = expectation(s, o);
  double sum = 0.0;
  for (std::uint64_t r = 0; r < 200; ++r) sum += sample_expectation(s, o, 500, r);
  EXPECT_NEAR(sum / 200.0, exact, 5.0 * std::sqrt(1.0 / (500.0 * 200.0)));
}

}  // namespace
}  // namespace qdla
