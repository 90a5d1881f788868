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

#include "qdla/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>
#include <string>

#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"
#include "qdla/random.hpp"
#include "qdla/stabilizer.hpp"

namespace qdla {
namespace {

void check_dense(const Circuit& circuit, std::span<const double> theta,
                 const PauliString& observable) {
  if (circuit.num_qubits() > kMaxGradientOperatorQubits) {
    throw ResourceError("dense gradient operators need n <= " +
                        std::to_string(kMaxGradientOperatorQubits) + ", got " +
                        std::to_string(circuit.num_qubits()));
  }
  if (theta.size() != circuit.num_params()) {
    throw DimensionError("circuit has " + std::to_string(circuit.num_params()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  if (observable.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("observable and circuit act on different qubit counts");
  }
}

void check_state(const Circuit& circuit, std::span<const double> theta, const Statevector& input,
                 const PauliString& observable) {
  if (theta.size() != circuit.num_params()) {
    throw DimensionError("circuit has " + std::to_string(circuit.num_params()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  if (input.num_qubits() != circuit.num_qubits() ||
      observable.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("state, observable and circuit act on different qubit counts");
  }
}

Eigen::MatrixXcd heisenberg_observable(const Eigen::MatrixXcd& u, const PauliString& observable) {
  Eigen::MatrixXcd ou = u;
  apply_pauli(ou, observable);
  return u.adjoint() * ou;
}

}  // namespace

std::vector<Eigen::MatrixXcd> gradient_operators(const Circuit& circuit,
                                                 std::span<const double> theta,
                                                 const PauliString& observable) {
  check_dense(circuit, theta, observable);
  const Eigen::MatrixXcd o_tilde = heisenberg_observable(circuit_unitary(circuit, theta), observable);
  const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits();
  Eigen::MatrixXcd prefix = Eigen::MatrixXcd::Identity(dim, dim);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(circuit.num_params());
  const Complex minus_i(0.0, -1.0);
  for (std::size_t j = 0; j < circuit.num_params(); ++j) {
    const Gate& gate = circuit.gate(j);
    Eigen::MatrixXcd gb = prefix;
    apply_pauli(gb, gate.generator);
    const Eigen::MatrixXcd g_tilde = prefix.adjoint() * gb;
    out.push_back(minus_i * (g_tilde * o_tilde - o_tilde * g_tilde));
    apply_pauli_rotation(prefix, gate.generator, theta[gate.param]);
  }
  return out;
}

HermitianOperator gradient_operator(const Circuit& circuit, std::span<const double> theta,
                                    std::size_t j, const PauliString& observable) {
  if (j >= circuit.num_params()) {
    throw InvalidInput("parameter index " + std::to_string(j) + " out of range [0, " +
                       std::to_string(circuit.num_params()) + ")");
  }
  check_dense(circuit, theta, observable);
  const Circuit prefix_circuit = circuit.truncated(j);
  const Eigen::MatrixXcd prefix =
      circuit_unitary(prefix_circuit, theta.subspan(0, j));
  Eigen::MatrixXcd gb = prefix;
  apply_pauli(gb, circuit.gate(j).generator);
  const Eigen::MatrixXcd g_tilde = prefix.adjoint() * gb;
  const Eigen::MatrixXcd o_tilde = heisenberg_observable(circuit_unitary(circuit, theta), observable);
  Eigen::MatrixXcd gamma = Complex(0.0, -1.0) * (g_tilde * o_tilde - o_tilde * g_tilde);
  return HermitianOperator(std::move(gamma), 1e-9);
}

CommutationMatrix commutation_matrix(const Circuit& circuit, const PauliString& observable,
                                     int samples, double tolerance, std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("commutation matrix needs at least one θ sample");
  const std::size_t l = circuit.num_params();
  CommutationMatrix cm(l);
  std::vector<double> theta(l);
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (auto& t : theta) t = angle(rng);
    const auto gammas = gradient_operators(circuit, theta, observable);
    std::vector<double> norms(l);
    for (std::size_t j = 0; j < l; ++j) norms[j] = gammas[j].norm();
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t k = j + 1; k < l; ++k) {
        if (!cm(j, k)) continue;
        const double comm = (gammas[j] * gammas[k] - gammas[k] * gammas[j]).norm();
        if (comm > tolerance * (norms[j] * norms[k] + 1.0)) cm.set(j, k, false);
      }
    }
  }
  return cm;
}

double cost(const Circuit& circuit, std::span<const double> theta, const Statevector& input,
            const PauliString& observable) {
  check_state(circuit, theta, input, observable);
  return expectation(run_circuit(circuit, theta, input), observable);
}

std::vector<std::pair<double, double>> shifted_costs(const Circuit& circuit,
                                                    std::span<const double> theta,
                                                    const Statevector& input,
                                                    const PauliString& observable) {
  check_state(circuit, theta, input, observable);
  const std::size_t l = circuit.num_params();
  // Shifting gate j by ±π/4 maps its output a to (a ± i G a) / √2, so with
  // g = G a and tail W: C± = (C + <Wg|O|Wg>) / 2 ∓ Im <Wa|O|Wg>.
  Eigen::VectorXcd final_state = input.amplitudes();
  apply_gates(circuit, theta, final_state, 0, l);
  const double c0 = expectation(final_state, observable);
  std::vector<std::pair<double, double>> out(l);
  Eigen::VectorXcd a = input.amplitudes();
  Eigen::VectorXcd g;
  for (std::size_t j = 0; j < l; ++j) {
    apply_gates(circuit, theta, a, j, j + 1);
    g = a;
    apply_pauli(g, circuit.gate(j).generator);
    apply_gates(circuit, theta, g, j + 1, l);
    const double cg = expectation(g, observable);
    const double cross = pauli_matrix_element(final_state, observable, g).imag();
    out[j] = {0.5 * (c0 + cg) - cross, 0.5 * (c0 + cg) + cross};
  }
  return out;
}

GradientEstimate parameter_shift_gradient(const Circuit& circuit, std::span<const double> theta,
                                          const Statevector& input, const PauliString& observable,
                                          std::uint64_t shots, std::uint64_t seed) {
  const auto costs = shifted_costs(circuit, theta, input, observable);
  GradientEstimate out;
  out.gradient.resize(costs.size());
  for (std::size_t j = 0; j < costs.size(); ++j) {
    double plus = costs[j].first;
    double minus = costs[j].second;
    if (shots > 0) {
      plus = sample_from_expectation(plus, shots, derive_seed(seed, 2 * j));
      minus = sample_from_expectation(minus, shots, derive_seed(seed, 2 * j + 1));
    }
    out.gradient[circuit.gate(j).param] = plus - minus;
  }
  out.circuits = 2 * costs.size();
  return out;
}

std::vector<double> finite_difference_gradient(const Circuit& circuit,
                                               std::span<const double> theta,
                                               const Statevector& input,
                                               const PauliString& observable, double step) {
  std::vector<double> shifted(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  for (std::size_t p = 0; p < theta.size(); ++p) {
    shifted[p] = theta[p] + step;
    const double plus = cost(circuit, shifted, input, observable);
    shifted[p] = theta[p] - step;
    const double minus = cost(circuit, shifted, input, observable);
    shifted[p] = theta[p];
    grad[p] = (plus - minus) / (2.0 * step);
  }
  return grad;
}

namespace {

/// Shared body of the block estimator; `phi` already holds blocks 0..a.
BlockGradient block_gradient_from_prefix(const Circuit& circuit, std::span<const double> theta,
                                         const Eigen::VectorXcd& phi,
                                         const PauliString& observable, std::size_t a,
                                         std::uint64_t shots, std::uint64_t seed) {
  const Block& block = circuit.blocks()[a];
  const std::size_t l = circuit.num_params();
  const int n = circuit.num_qubits();
  const bool final_block = a + 1 == circuit.blocks().size();
  BlockGradient out;
  for (std::size_t j = block.begin; j < block.end; ++j) out.params.push_back(circuit.gate(j).param);
  out.values.assign(block.size(), 0.0);

  const PauliString& lead = circuit.gate(block.begin).generator;
  std::vector<bool> flip(l, false);
  for (std::size_t k = block.end; k < l; ++k) {
    flip[k] = !commutes_unchecked(circuit.gate(k).generator, lead);
  }
  Eigen::VectorXcd w_phi = phi;
  apply_gates(circuit, theta, w_phi, block.end, l);
  Eigen::VectorXcd wt_phi = phi;
  apply_gates(circuit, theta, wt_phi, block.end, l, flip);

  for (int g = 0; g < 2; ++g) {
    std::vector<std::size_t> members;
    for (std::size_t j = block.begin; j < block.end; ++j) {
      const bool anti = !commutes_unchecked(circuit.gate(j).generator, observable);
      if (static_cast<int>(anti) == g) members.push_back(j);
    }
    if (members.empty()) continue;
    if (g == 0 && final_block) continue;  // W = W̃ = I: these derivatives vanish.
    const Eigen::VectorXcd& av = wt_phi;
    const Eigen::VectorXcd bv = i_pow(-(g + 1)) * w_phi;
    std::vector<PauliString> o_j;
    for (std::size_t j : members) {
      const PauliString p = circuit.gate(j).generator * observable;
      o_j.push_back(p.with_phase(p.phase() + g));
    }
    ++out.circuits;
    if (shots == 0) {
      for (std::size_t t = 0; t < members.size(); ++t) {
        out.values[members[t] - block.begin] = 2.0 * pauli_matrix_element(bv, o_j[t], av).real();
      }
      continue;
    }
    // Ancilla is the most significant qubit of an (n + 1)-qubit register.
    Eigen::VectorXcd reg(2 * av.size());
    reg.head(av.size()) = 0.5 * (av + bv);
    reg.tail(av.size()) = 0.5 * (av - bv);
    std::vector<PauliString> measured;
    const std::uint64_t anc = std::uint64_t{1} << n;
    for (const auto& p : o_j) {
      measured.push_back(PauliString::from_bits(n + 1, p.x_bits(), p.z_bits() | anc, p.phase()));
    }
    const auto means = sample_commuting(reg, measured, shots, derive_seed(seed, static_cast<std::uint64_t>(g)));
    for (std::size_t t = 0; t < members.size(); ++t) {
      out.values[members[t] - block.begin] = 2.0 * means[t];
    }
  }
  return out;
}

void require_cbc(const Circuit& circuit) {
  const CbcReport rep = cbc_validate(circuit, 1);
  if (!rep.valid) {
    throw InvalidInput("LCU block gradient needs a commuting block circuit: " +
                       rep.violations.front().reason);
  }
}

}  // namespace

BlockGradient lcu_block_gradient(const Circuit& circuit, std::span<const double> theta,
                                 const Statevector& input, const PauliString& observable,
                                 std::size_t block, std::uint64_t shots, std::uint64_t seed) {
  check_state(circuit, theta, input, observable);
  require_cbc(circuit);
  if (block >= circuit.blocks().size()) {
    throw InvalidInput("block index " + std::to_string(block) + " out of range [0, " +
                       std::to_string(circuit.blocks().size()) + ")");
  }
  Eigen::VectorXcd phi = input.amplitudes();
  apply_gates(circuit, theta, phi, 0, circuit.blocks()[block].end);
  return block_gradient_from_prefix(circuit, theta, phi, observable, block, shots, seed);
}

GradientEstimate lcu_gradient(const Circuit& circuit, std::span<const double> theta,
                              const Statevector& input, const PauliString& observable,
                              std::uint64_t shots, std::uint64_t seed) {
  check_state(circuit, theta, input, observable);
  require_cbc(circuit);
  GradientEstimate out;
  out.gradient.assign(circuit.num_params(), 0.0);
  Eigen::VectorXcd phi = input.amplitudes();
  for (std::size_t a = 0; a < circuit.blocks().size(); ++a) {
    const Block& b = circuit.blocks()[a];
    apply_gates(circuit, theta, phi, b.begin, b.end);
    const BlockGradient bg =
        block_gradient_from_prefix(circuit, theta, phi, observable, a, shots, derive_seed(seed, a));
    for (std::size_t t = 0; t < bg.params.size(); ++t) out.gradient[bg.params[t]] = bg.values[t];
    out.circuits += bg.circuits;
  }
  return out;
}

namespace {

Rational reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{num, den} : Rational{num / g, den / g};
}

}  // namespace

std::vector<FeffPoint> f_eff_curve(AnsatzKind kind, int n, std::span<const std::size_t> l_list,
                                   int samples, std::uint64_t seed, std::size_t max_exact) {
  std::vector<FeffPoint> out;
  const PauliString observable = default_observable(kind, n);
  for (std::size_t l : l_list) {
    const Circuit c = build_ansatz_gates(kind, n, l);
    const CommutationMatrix cm = commutation_matrix(c, observable, samples, 1e-8, seed);
    const PartitionMode mode = l <= max_exact ? PartitionMode::kExact : PartitionMode::kGreedy;
    const MeasurementPartition part = min_measurement_partition(cm, mode, max_exact);
    FeffPoint pt;
    pt.num_params = l;
    pt.min_m = part.num_groups();
    pt.f_eff = reduced(static_cast<std::int64_t>(l), static_cast<std::int64_t>(pt.min_m));
    pt.mode = mode;
    pt.optimal = part.optimal;
    pt.samples = samples;
    out.push_back(pt);
  }
  return out;
}

namespace {

struct GeneratorClasses {
  std::vector<std::size_t> component;  ///< component id per gate
  std::vector<bool> multi;             ///< component has more than one node
  std::vector<std::vector<bool>> signature;  ///< commutation with each basis node
};

GeneratorClasses classify_generators(const Circuit& circuit) {
  const auto gens = circuit.generators();
  DlaGraph graph(lie_closure(gens));
  const auto comps = graph.components();
  std::vector<std::size_t> comp_of(graph.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto i : comps[c]) comp_of[i] = c;
  }
  GeneratorClasses out;
  for (const auto& g : gens) {
    std::size_t idx = graph.size();
    for (std::size_t i = 0; i < graph.size(); ++i) {
      if (PhaselessEqual{}(graph.node(i), g)) {
        idx = i;
        break;
      }
    }
    if (idx == graph.size()) throw InvalidInput("generator missing from its own Lie closure");
    out.component.push_back(comp_of[idx]);
    out.multi.push_back(comps[comp_of[idx]].size() > 1);
    std::vector<bool> sig(graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i) sig[i] = commutes_unchecked(g, graph.node(i));
    out.signature.push_back(std::move(sig));
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> predicted_incompatible_pairs(
    const Circuit& circuit, const PauliString& observable, std::size_t prefix) {
  if (observable.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("observable and circuit qubit counts differ");
  }
  const auto cls = classify_generators(circuit);
  const auto& gates = circuit.gates();
  prefix = std::min(prefix, gates.size());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < prefix; ++j) {
    for (std::size_t k = j + 1; k < prefix; ++k) {
      const auto& gj = gates[j].generator;
      const auto& gk = gates[k].generator;
      bool forbidden = !commutes_unchecked(gj, gk);
      const bool connected = cls.component[j] == cls.component[k] && cls.multi[j];
      if (!forbidden && connected) {
        forbidden = commutes_unchecked(gj, observable) != commutes_unchecked(gk, observable) ||
                    cls.signature[j] != cls.signature[k] || PhaselessEqual{}(gj, gk);
      }
      if (forbidden) out.emplace_back(j, k);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> disconnected_pairs(const Circuit& circuit) {
  const auto cls = classify_generators(circuit);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < cls.component.size(); ++j) {
    for (std::size_t k = j + 1; k < cls.component.size(); ++k) {
      if (cls.component[j] != cls.component[k]) out.emplace_back(j, k);
    }
  }
  return out;
}

std::vector<std::optional<Rational>> deep_limit_estimates(std::span<const FeffPoint> points) {
  std::vector<std::optional<Rational>> out(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto dl = static_cast<std::int64_t>(points[i].num_params) -
                    static_cast<std::int64_t>(points[i - 1].num_params);
    const auto dm = static_cast<std::int64_t>(points[i].min_m) -
                    static_cast<std::int64_t>(points[i - 1].min_m);
    if (dl > 0 && dm > 0) out[i] = reduced(dl, dm);
  }
  return out;
}

}  // namespace qdla
