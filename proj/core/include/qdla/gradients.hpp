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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qdla/circuit.hpp"
#include "qdla/hermitian.hpp"
#include "qdla/lie.hpp"
#include "qdla/partition.hpp"
#include "qdla/simulator.hpp"

namespace qdla {

/// Largest register for dense gradient operators.
inline constexpr int kMaxGradientOperatorQubits = 6;

/// Γ_j = -i[G̃_j, Õ] with G̃_j = B_j^† G_j B_j (B_j: gates before j) and
/// Õ = U^† O U. Its expectation on any input state is ∂C/∂θ_j.
HermitianOperator gradient_operator(const Circuit& circuit, std::span<const double> theta,
                                    std::size_t j, const PauliString& observable);

/// All Γ_j in one pass over the circuit.
std::vector<Eigen::MatrixXcd> gradient_operators(const Circuit& circuit,
                                                 std::span<const double> theta,
                                                 const PauliString& observable);

/// Entry (j, k) is true iff ||[Γ_j, Γ_k]||_F <= tolerance (||Γ_j||_F ||Γ_k||_F + 1)
/// at every one of `samples` parameter vectors drawn uniformly from
/// [-π, π]^L.
CommutationMatrix commutation_matrix(const Circuit& circuit, const PauliString& observable,
                                     int samples = 3, double tolerance = 1e-8,
                                     std::uint64_t seed = 0);

/// Structurally incompatible parameter pairs (j < k < prefix) predicted from
/// the generators alone: anticommuting G_j and G_k; DLA-connected G_j and G_k
/// that differ in commutation with O or with some DLA basis element; and
/// repeated generators. Gates at or beyond `prefix` belong to the final
/// segment and are not classified.
std::vector<std::pair<std::size_t, std::size_t>> predicted_incompatible_pairs(
    const Circuit& circuit, const PauliString& observable, std::size_t prefix);

/// Pairs of generators lying in different connected components of the DLA
/// graph; these are always simultaneously measurable.
std::vector<std::pair<std::size_t, std::size_t>> disconnected_pairs(const Circuit& circuit);

/// C(θ) = <ψ|U^† O U|ψ>.
double cost(const Circuit& circuit, std::span<const double> theta, const Statevector& input,
            const PauliString& observable);

struct GradientEstimate {
  std::vector<double> gradient;
  std::size_t circuits = 0;  ///< distinct circuits executed
};

/// Exact (C(θ + π/4 e_j), C(θ - π/4 e_j)) for every gate, using one tail
/// propagation per gate instead of two full circuit runs.
std::vector<std::pair<double, double>> shifted_costs(const Circuit& circuit,
                                                    std::span<const double> theta,
                                                    const Statevector& input,
                                                    const PauliString& observable);

/// Component j = C(θ + π/4 e_j) - C(θ - π/4 e_j); each cost estimated with
/// `shots` samples, or exactly when shots == 0. Always 2L circuits.
GradientEstimate parameter_shift_gradient(const Circuit& circuit, std::span<const double> theta,
                                          const Statevector& input, const PauliString& observable,
                                          std::uint64_t shots, std::uint64_t seed);

/// Central finite differences of the exact cost.
std::vector<double> finite_difference_gradient(const Circuit& circuit,
                                               std::span<const double> theta,
                                               const Statevector& input,
                                               const PauliString& observable, double step = 1e-5);

struct BlockGradient {
  std::vector<std::size_t> params;  ///< parameters of the block, in gate order
  std::vector<double> values;
  std::size_t circuits = 0;
};

/// Derivatives of every parameter in one block of a commuting block circuit,
/// one ancilla-assisted circuit per commutation sign with O. The block's
/// prefix state |φ> runs blocks 0..a; the tail W runs the later blocks and W̃
/// is W with angles negated on gates that anticommute with the block. With
/// a = W̃|φ>, b = (-i)^{g+1} W|φ> and O_j = i^g G_j O (g = 1 when G_j
/// anticommutes with O), the register (|0>(a+b) + |1>(a-b))/2 gives
/// ∂C/∂θ_j = <2 Z ⊗ O_j>. The commuting part of the final block is exactly
/// zero and costs no circuit. Throws InvalidInput on an invalid block
/// circuit.
BlockGradient lcu_block_gradient(const Circuit& circuit, std::span<const double> theta,
                                 const Statevector& input, const PauliString& observable,
                                 std::size_t block, std::uint64_t shots, std::uint64_t seed);

/// lcu_block_gradient over every block, with per-block derived seeds.
GradientEstimate lcu_gradient(const Circuit& circuit, std::span<const double> theta,
                              const Statevector& input, const PauliString& observable,
                              std::uint64_t shots, std::uint64_t seed);

struct FeffPoint {
  std::size_t num_params = 0;
  std::size_t min_m = 0;
  Rational f_eff;
  PartitionMode mode = PartitionMode::kExact;
  bool optimal = false;
  int samples = 0;
};

/// L / min(M_L) for the ansatz truncated to each requested gate count. Exact
/// partitions up to `max_exact` parameters, greedy beyond.
std::vector<FeffPoint> f_eff_curve(AnsatzKind kind, int n, std::span<const std::size_t> l_list,
                                   int samples, std::uint64_t seed, std::size_t max_exact = 60);

/// Deep-limit estimate ΔL / ΔM between each point and its predecessor. The
/// final circuit segment adds a constant to min(M_L), which the difference
/// cancels. Fractions are in lowest terms. Empty for the first point or when M does not grow.
std::vector<std::optional<Rational>> deep_limit_estimates(std::span<const FeffPoint> points);

}  // namespace qdla
