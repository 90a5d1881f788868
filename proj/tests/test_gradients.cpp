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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"
#include "qdla/gradients.hpp"
#include "qdla/stabilizer.hpp"

namespace qdla {
namespace {

std::vector<double> random_theta(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> t(size);
  for (auto& x : t) x = u(rng);
  return t;
}

std::vector<std::string> labels_of(const Circuit& c) {
  std::vector<std::string> out;
  for (const auto& g : c.gates()) out.push_back(g.generator.label());
  return out;
}

// d/dθ_j of U^† O U by central differences on dense matrices.
Eigen::MatrixXcd dense_gradient_operator(const Circuit& c, std::vector<double> theta,
                                         std::size_t j, const std::string& obs) {
  const auto labels = labels_of(c);
  const Eigen::MatrixXcd o = testing::pauli_kron(obs);
  const double h = 1e-5;
  theta[j] += h;
  const Eigen::MatrixXcd up = testing::circuit_matrix(labels, theta);
  theta[j] -= 2 * h;
  const Eigen::MatrixXcd down = testing::circuit_matrix(labels, theta);
  return (up.adjoint() * o * up - down.adjoint() * o * down) / (2 * h);
}

TEST(Cost, SingleQubitClosedForm) {
  Circuit c(1);
  c.add_gate(PauliString::from_label("Y"));
  const auto z = PauliString::from_label("Z");
  for (double t : {-1.1, 0.0, 0.3, 2.0}) {
    const std::vector<double> theta{t};
    EXPECT_NEAR(cost(c, theta, Statevector(1), z), std::cos(2 * t), 1e-14);
    const auto ps = parameter_shift_gradient(c, theta, Statevector(1), z, 0, 0);
    EXPECT_NEAR(ps.gradient[0], -2 * std::sin(2 * t), 1e-13);
    EXPECT_EQ(ps.circuits, 2u);
  }
}

TEST(Cost, MatchesDenseOracle) {
  for (auto kind : {AnsatzKind::kSA, AnsatzKind::kNSA, AnsatzKind::kSLPA, AnsatzKind::kDE}) {
    const auto c = build_ansatz_gates(kind, 4, 30);
    const auto theta = random_theta(30, 3);
    const auto psi = haar_product_state(4, 11);
    const auto o = default_observable(kind, 4);
    EXPECT_NEAR(cost(c, theta, psi, o),
                testing::dense_cost(labels_of(c), theta, psi.amplitudes(), o.label()), 1e-12)
        << to_string(kind);
  }
}

TEST(ParameterShift, MatchesFiniteDifferences) {
  for (auto kind : {AnsatzKind::kSA, AnsatzKind::kNSA, AnsatzKind::kDE}) {
    const auto c = build_ansatz_gates(kind, 4, 25);
    const auto theta = random_theta(25, 5);
    const auto psi = haar_product_state(4, 2);
    const auto o = default_observable(kind, 4);
    const auto ps = parameter_shift_gradient(c, theta, psi, o, 0, 0);
    const auto fd = finite_difference_gradient(c, theta, psi, o);
    ASSERT_EQ(ps.gradient.size(), 25u);
    EXPECT_EQ(ps.circuits, 50u);
    for (std::size_t j = 0; j < 25; ++j) EXPECT_NEAR(ps.gradient[j], fd[j], 1e-8);
    const auto shifted = shifted_costs(c, theta, psi, o);
    for (std::size_t j = 0; j < 25; ++j) {
      auto plus = theta;
      plus[j] += std::numbers::pi / 4;
      EXPECT_NEAR(shifted[j].first, cost(c, plus, psi, o), 1e-12);
    }
  }
}

TEST(ParameterShift, ShotEstimateIsUnbiased) {
  const auto c = build_ansatz_gates(AnsatzKind::kSA, 4, 12);
  const auto theta = random_theta(12, 8);
  const auto psi = haar_product_state(4, 1);
  const auto o = default_observable(AnsatzKind::kSA, 4);
  const auto exact = parameter_shift_gradient(c, theta, psi, o, 0, 0).gradient;
  const int reps = 300;
  const std::uint64_t shots = 200;
  std::vector<double> mean(12, 0.0);
  for (int r = 0; r < reps; ++r) {
    const auto g = parameter_shift_gradient(c, theta, psi, o, shots, static_cast<std::uint64_t>(r));
    for (std::size_t j = 0; j < 12; ++j) mean[j] += g.gradient[j] / reps;
  }
  // Each component is a difference of two estimates with variance <= 1/shots.
  const double tol = 5.0 * std::sqrt(2.0 / (shots * reps));
  for (std::size_t j = 0; j < 12; ++j) EXPECT_NEAR(mean[j], exact[j], tol);
}

TEST(Lcu, MatchesParameterShiftExactly) {
  for (int layers : {1, 2}) {
    const auto c = build_ansatz(AnsatzKind::kSLPA, 4, layers);
    const auto theta = random_theta(c.num_params(), 13 + static_cast<std::uint64_t>(layers));
    const auto psi = haar_product_state(4, 6);
    const auto o = default_observable(AnsatzKind::kSLPA, 4);
    const auto lcu = lcu_gradient(c, theta, psi, o, 0, 0);
    const auto ps = parameter_shift_gradient(c, theta, psi, o, 0, 0);
    for (std::size_t j = 0; j < c.num_params(); ++j) {
      EXPECT_NEAR(lcu.gradient[j], ps.gradient[j], 1e-10) << j;
    }
    EXPECT_EQ(lcu.circuits, measurement_budget(c, GradientMethod::kLcuBlocks, o));
    EXPECT_LT(lcu.circuits, ps.circuits);
  }
}

TEST(Lcu, PartialFinalBlockAndShots) {
  const auto c = build_ansatz_gates(AnsatzKind::kSLPA, 4, 30);
  const auto theta = random_theta(30, 21);
  const auto psi = haar_product_state(4, 4);
  const auto o = default_observable(AnsatzKind::kSLPA, 4);
  const auto exact = parameter_shift_gradient(c, theta, psi, o, 0, 0).gradient;
  const auto lcu = lcu_gradient(c, theta, psi, o, 0, 0).gradient;
  for (std::size_t j = 0; j < 30; ++j) EXPECT_NEAR(lcu[j], exact[j], 1e-10);

  const int reps = 200;
  const std::uint64_t shots = 400;
  std::vector<double> mean(30, 0.0);
  for (int r = 0; r < reps; ++r) {
    const auto g = lcu_gradient(c, theta, psi, o, shots, static_cast<std::uint64_t>(r)).gradient;
    for (std::size_t j = 0; j < 30; ++j) mean[j] += g[j] / reps;
  }
  const double tol = 5.0 * 2.0 / std::sqrt(static_cast<double>(shots * reps));
  for (std::size_t j = 0; j < 30; ++j) EXPECT_NEAR(mean[j], exact[j], tol) << j;
}

TEST(Lcu, RejectsInvalidInput) {
  const auto sa = build_ansatz_gates(AnsatzKind::kSA, 4, 12);
  Circuit blocked(4);
  const std::vector<PauliString> bad = {PauliString::from_label("XIII"),
                                        PauliString::from_label("ZIII")};
  blocked.add_block(bad);
  const std::vector<double> theta(2, 0.1);
  const auto o = PauliString::from_label("XXII");
  EXPECT_THROW(lcu_gradient(blocked, theta, Statevector(4), o, 0, 0), InvalidInput);
  const auto slpa = build_ansatz(AnsatzKind::kSLPA, 4, 1);
  const auto t = random_theta(slpa.num_params(), 1);
  EXPECT_THROW(lcu_block_gradient(slpa, t, Statevector(4), o, 999, 0, 0), InvalidInput);
  (void)sa;
}

TEST(GradientOperator, MatchesDenseDerivative) {
  const auto c = build_ansatz_gates(AnsatzKind::kNSA, 3 + 1, 14);
  const auto theta = random_theta(14, 31);
  const auto o = default_observable(AnsatzKind::kNSA, 4);
  const auto all = gradient_operators(c, theta, o);
  ASSERT_EQ(all.size(), 14u);
  for (std::size_t j = 0; j < 14; ++j) {
    const auto oracle = dense_gradient_operator(c, theta, j, o.label());
    EXPECT_LT((all[j] - oracle).norm(), 1e-7) << j;
    EXPECT_LT((gradient_operator(c, theta, j, o).matrix() - all[j]).norm(), 1e-12);
  }
  const auto psi = haar_product_state(4, 3);
  const auto fd = finite_difference_gradient(c, theta, psi, o);
  for (std::size_t j = 0; j < 14; ++j) {
    EXPECT_NEAR(psi.amplitudes().dot(all[j] * psi.amplitudes()).real(), fd[j], 1e-8);
  }
  EXPECT_THROW(gradient_operator(c, theta, 14, o), InvalidInput);
  const auto big = build_ansatz_gates(AnsatzKind::kSA, 8, 4);
  EXPECT_THROW(gradient_operators(big, random_theta(4, 1), default_observable(AnsatzKind::kSA, 8)),
               ResourceError);
}

TEST(CommutationMatrix, AgreesWithDenseOperators) {
  const auto c = build_ansatz_gates(AnsatzKind::kSA, 4, 16);
  const auto o = default_observable(AnsatzKind::kSA, 4);
  const auto cm = commutation_matrix(c, o, 2, 1e-8, 5);
  std::vector<std::vector<double>> thetas;
  std::vector<std::vector<Eigen::MatrixXcd>> ops;
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto theta = random_theta(16, 1000 + s);
    std::vector<Eigen::MatrixXcd> g;
    for (std::size_t j = 0; j < 16; ++j) g.push_back(dense_gradient_operator(c, theta, j, o.label()));
    ops.push_back(std::move(g));
  }
  std::size_t compatible = 0;
  for (std::size_t j = 0; j < 16; ++j) {
    EXPECT_TRUE(cm(j, j));
    for (std::size_t k = j + 1; k < 16; ++k) {
      EXPECT_EQ(cm(j, k), cm(k, j));
      double worst = 0.0;
      for (const auto& g : ops) {
        const double scale = g[j].norm() * g[k].norm() + 1.0;
        worst = std::max(worst, (g[j] * g[k] - g[k] * g[j]).norm() / scale);
      }
      EXPECT_EQ(cm(j, k), worst < 1e-6) << j << "," << k << " " << worst;
      compatible += cm(j, k) ? 1 : 0;
    }
  }
  EXPECT_GT(compatible, 0u);
  EXPECT_THROW(commutation_matrix(c, o, 0), InvalidInput);
}

TEST(CommutationMatrix, StructuralPredictionsHold) {
  for (auto kind : {AnsatzKind::kSA, AnsatzKind::kNSA, AnsatzKind::kSLPA, AnsatzKind::kDE}) {
    const auto c = build_ansatz_gates(kind, 4, 48);
    const auto o = default_observable(kind, 4);
    const auto cm = commutation_matrix(c, o, 2, 1e-8, 1);
    const auto predicted = predicted_incompatible_pairs(c, o, 24);
    for (auto [j, k] : predicted) {
      EXPECT_LT(j, k);
      EXPECT_LT(k, 24u);
      EXPECT_FALSE(cm(j, k)) << to_string(kind) << " " << j << "," << k;
    }
    for (auto [j, k] : disconnected_pairs(c)) EXPECT_TRUE(cm(j, k)) << to_string(kind);
  }
}

TEST(CommutationMatrix, DisconnectedComponentsOfDe) {
  const auto c = build_ansatz(AnsatzKind::kDE, 4, 1);
  const auto pairs = disconnected_pairs(c);
  // Five gates on each half, every cross pair is disconnected.
  EXPECT_EQ(pairs.size(), 25u);
  for (auto [j, k] : pairs) EXPECT_TRUE((j < 5) != (k < 5));
  EXPECT_TRUE(disconnected_pairs(build_ansatz(AnsatzKind::kSA, 4, 1)).empty());
}

TEST(Feff, DeepLimitEstimates) {
  std::vector<FeffPoint> pts(4);
  const std::size_t l[] = {48, 96, 192, 240};
  const std::size_t m[] = {11, 23, 47, 47};
  for (int i = 0; i < 4; ++i) {
    pts[static_cast<std::size_t>(i)].num_params = l[i];
    pts[static_cast<std::size_t>(i)].min_m = m[i];
  }
  const auto est = deep_limit_estimates(pts);
  ASSERT_EQ(est.size(), 4u);
  EXPECT_FALSE(est[0].has_value());
  ASSERT_TRUE(est[1].has_value());
  EXPECT_EQ(est[1]->num, 4);
  EXPECT_EQ(est[1]->den, 1);
  EXPECT_EQ(est[2]->num, 4);
  EXPECT_FALSE(est[3].has_value());
  pts[1].min_m = 19;
  const auto frac = deep_limit_estimates(pts);
  EXPECT_EQ(frac[1]->num, 6);
  EXPECT_EQ(frac[1]->den, 1);
  pts[1].min_m = 20;
  EXPECT_EQ(deep_limit_estimates(pts)[1]->num, 16);
  EXPECT_EQ(deep_limit_estimates(pts)[1]->den, 3);
}

TEST(Feff, SmallCurves) {
  const std::size_t sa_l[] = {12, 24};
  const auto sa = f_eff_curve(AnsatzKind::kSA, 4, sa_l, 2, 0);
  ASSERT_EQ(sa.size(), 2u);
  for (const auto& p : sa) {
    EXPECT_EQ(p.mode, PartitionMode::kExact);
    EXPECT_EQ(p.min_m + 1, p.num_params);
    EXPECT_NEAR(p.f_eff.value(),
                static_cast<double>(p.num_params) / static_cast<double>(p.min_m), 1e-12);
  }
  const std::size_t slpa_l[] = {48};
  const auto slpa = f_eff_curve(AnsatzKind::kSLPA, 4, slpa_l, 2, 0);
  EXPECT_EQ(slpa[0].min_m, 11u);
  const auto greedy = f_eff_curve(AnsatzKind::kSLPA, 4, slpa_l, 2, 0, 40);
  EXPECT_EQ(greedy[0].mode, PartitionMode::kGreedy);
  EXPECT_GE(greedy[0].min_m, 11u);
}

}  // namespace
}  // namespace qdla
