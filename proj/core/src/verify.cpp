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

#include "qdla/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "qdla/ansatz.hpp"
#include "qdla/experiments.hpp"
#include "qdla/gradients.hpp"
#include "qdla/hermitian.hpp"
#include "qdla/lie.hpp"
#include "qdla/random.hpp"
#include "qdla/simulator.hpp"
#include "qdla/stabilizer.hpp"

namespace qdla {
namespace {

constexpr int kN = 4;
constexpr AnsatzKind kKinds[] = {AnsatzKind::kSA, AnsatzKind::kSLPA, AnsatzKind::kNSA,
                                 AnsatzKind::kDE};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;    ///< summary shown on success
  std::string failures;         ///< shown instead on failure

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!passed) failures += "; ";
    passed = false;
    failures += what;
  }
  std::string text() const { return passed ? detail.str() : failures; }
};

std::vector<double> random_theta(std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> theta(size);
  for (auto& t : theta) t = angle(rng);
  return theta;
}

DlaGraph ansatz_graph(AnsatzKind kind, int n) {
  return DlaGraph(lie_closure(build_ansatz(kind, n, 1).generators()));
}

std::size_t expected_dim(AnsatzKind kind, int n) {
  const std::size_t full = std::size_t{1} << (2 * n);
  switch (kind) {
    case AnsatzKind::kSA:
    case AnsatzKind::kSLPA:
      return full / 4 - 4;
    case AnsatzKind::kNSA:
      return full - 1;
    default:
      return 30;
  }
}

// Whole-layer (L1, L2) pairs whose slope gives the deep-limit efficiency.
// The SLPA layer has 48 gates, so its second point is partitioned greedily.
std::pair<std::size_t, std::size_t> feff_fit_points(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::kSLPA:
      return {48, 96};
    case AnsatzKind::kDE:
      return {40, 60};
    default:
      return {24, 36};
  }
}

void check_dla_dimensions(Outcome& out, const VerifyOptions& opt) {
  for (auto kind : kKinds) {
    const auto dim = ansatz_graph(kind, kN).size();
    out.require(dim == expected_dim(kind, kN), to_string(kind) + " dim " + std::to_string(dim));
    out.detail << to_string(kind) << "=" << dim << " ";
  }
  if (opt.thorough) {
    const auto dim = ansatz_graph(AnsatzKind::kSA, 6).size();
    out.require(dim == expected_dim(AnsatzKind::kSA, 6), "sa n=6 dim " + std::to_string(dim));
    out.detail << "sa(n=6)=" << dim;
  }
}

void check_graph_properties(Outcome& out, const VerifyOptions&) {
  std::size_t pairs = 0;
  for (auto kind : kKinds) {
    const auto graph = ansatz_graph(kind, kN);
    const auto paths = check_short_paths(graph);
    pairs += paths.pairs_checked;
    out.require(paths.ok, to_string(kind) + " has a connected pair at distance " +
                              std::to_string(paths.max_distance));
    const auto dec = decompose_dla(graph, default_observable(kind, kN));
    for (auto r : dec.r) out.require(r >= 3, to_string(kind) + " component with r < 3");
    const auto bounds = verify_appendix_bounds(graph, dec, kN);
    for (const auto& c : bounds.checks) {
      out.require(c.ok, to_string(kind) + " bound " + c.name + " violated");
    }
    out.require(bounds.stabilizers_commute, to_string(kind) + " derived stabilizers do not commute");
  }
  out.detail << pairs << " connected pairs within distance 2";
}

void check_tradeoff(Outcome& out, const VerifyOptions& opt) {
  for (auto kind : kKinds) {
    auto [l1, l2] = feff_fit_points(kind);
    const std::size_t l_list[] = {l1, l2};
    const auto points = f_eff_curve(kind, kN, l_list, 3, opt.seed);
    const auto slope = deep_limit_estimates(points)[1];
    if (!slope) {
      out.require(false, to_string(kind) + " efficiency fit failed");
      continue;
    }
    const auto x = static_cast<std::int64_t>(ansatz_graph(kind, kN).size());
    const auto verdict = tradeoff_verdict(x, *slope, kN);
    out.require(verdict.upper_ok && verdict.lower_ok, to_string(kind) + " violates the trade-off");
    const bool should_saturate = kind == AnsatzKind::kSLPA || kind == AnsatzKind::kNSA;
    if (should_saturate) out.require(verdict.saturated, to_string(kind) + " not saturated");
    out.detail << to_string(kind) << " F=" << slope->num;
    if (slope->den != 1) out.detail << "/" << slope->den;
    out.detail << " X=" << x << " ";
  }
}

void check_centralizers(Outcome& out, const VerifyOptions&) {
  const std::vector<std::pair<int, std::vector<std::string>>> groups = {
      {2, {"XX", "ZZ"}},        {4, {"XXXX", "ZZZZ"}}, {4, {"ZZII", "IIZZ"}},
      {3, {"ZZI", "IZZ"}},      {4, {"XXXX"}},         {4, {"ZIII", "IXII", "IIYI"}},
  };
  for (const auto& [n, labels] : groups) {
    std::vector<PauliString> gens;
    for (const auto& l : labels) gens.push_back(PauliString::from_label(l));
    const auto group = stabilizer_closure(n, gens);
    std::uint64_t count = 0;
    const std::uint64_t side = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < side; ++x) {
      for (std::uint64_t z = 0; z < side; ++z) {
        const auto p = PauliString::from_bits(n, x, z);
        bool ok = true;
        for (const auto& s : group.elements) ok = ok && commutes(p, s);
        count += ok ? 1 : 0;
      }
    }
    out.require(count == centralizer_dim(group), "centralizer mismatch for " + labels.front());
  }
  out.detail << groups.size() << " groups";
}

void check_block_structure(Outcome& out, const VerifyOptions&) {
  const auto group = parity_group(kN);
  const auto slpa = build_ansatz(AnsatzKind::kSLPA, kN, 1);
  const auto report = cbc_validate(slpa);
  out.require(report.valid, "SLPA is not a valid block circuit");
  out.require(check_circuit_symmetry(slpa, group), "SLPA breaks the parity symmetry");
  out.require(check_circuit_symmetry(build_ansatz(AnsatzKind::kSA, kN, 1), group),
              "SA breaks the parity symmetry");
  out.require(!check_circuit_symmetry(build_ansatz(AnsatzKind::kNSA, kN, 1), group),
              "NSA unexpectedly symmetric");
  const auto form = cbc_to_stabilizer_form(slpa);
  out.require(form.group.order() == group.order(), "recovered stabilizer group has wrong order");
  for (const auto& s : form.group.elements) {
    out.require(group.contains(s), "recovered stabilizer " + s.label() + " not in the group");
  }
  out.detail << slpa.blocks().size() << " blocks of " << slpa.blocks().front().size();
}

void check_budget(Outcome& out, const VerifyOptions&) {
  const auto c = build_ansatz_gates(AnsatzKind::kSLPA, kN, 96);
  const auto o = default_observable(AnsatzKind::kSLPA, kN);
  const auto ps = measurement_budget(c, GradientMethod::kParameterShift, o);
  const auto lcu = measurement_budget(c, GradientMethod::kLcuBlocks, o);
  out.require(ps == 2 * c.num_params(), "parameter shift budget " + std::to_string(ps));
  out.require(lcu * 8 == ps, "ratio " + std::to_string(ps) + "/" + std::to_string(lcu));
  out.detail << ps << " vs " << lcu << " circuits";
}

void check_gradients(Outcome& out, const VerifyOptions& opt) {
  double worst_fd = 0.0;
  double worst_lcu = 0.0;
  double worst_op = 0.0;
  std::uint64_t task = 0;
  for (auto kind : kKinds) {
    const auto c = build_ansatz_gates(kind, kN, 24);
    const auto o = default_observable(kind, kN);
    for (int rep = 0; rep < 2; ++rep) {
      const auto theta = random_theta(c.num_params(), derive_seed(opt.seed, ++task));
      const auto input = haar_product_state(kN, derive_seed(opt.seed, ++task));
      const auto ps = parameter_shift_gradient(c, theta, input, o, 0, 0).gradient;
      const auto fd = finite_difference_gradient(c, theta, input, o);
      for (std::size_t j = 0; j < ps.size(); ++j) {
        worst_fd = std::max(worst_fd, std::abs(ps[j] - fd[j]) / std::max(1.0, std::abs(ps[j])));
      }
      if (kind == AnsatzKind::kSLPA) {
        const auto lcu = lcu_gradient(c, theta, input, o, 0, 0).gradient;
        for (std::size_t j = 0; j < ps.size(); ++j) {
          worst_lcu = std::max(worst_lcu, std::abs(ps[j] - lcu[j]));
        }
      }
      for (std::size_t j = 0; j < ps.size(); j += 5) {
        const auto gamma = gradient_operator(c, theta, j, o);
        const auto& psi = input.amplitudes();
        const double value = psi.dot(gamma.matrix() * psi).real();
        worst_op = std::max(worst_op, std::abs(value - ps[j]));
      }
    }
  }
  out.require(worst_fd < 1e-6, "finite-difference mismatch");
  out.require(worst_lcu < 1e-10, "LCU mismatch");
  out.require(worst_op < 1e-10, "gradient-operator mismatch");
  out.detail << std::scientific << std::setprecision(1) << "fd " << worst_fd << " lcu "
             << worst_lcu << " op " << worst_op;
}

void check_commutation_patterns(Outcome& out, const VerifyOptions& opt) {
  constexpr std::size_t kL = 48;
  constexpr std::size_t kFinal = 24;
  for (auto kind : kKinds) {
    const auto c = build_ansatz_gates(kind, kN, kL);
    const auto o = default_observable(kind, kN);
    const auto cm = commutation_matrix(c, o, 3, 1e-8, opt.seed);
    std::size_t bad = 0;
    for (auto [j, k] : predicted_incompatible_pairs(c, o, kL - kFinal)) bad += cm(j, k) ? 1 : 0;
    for (auto [j, k] : disconnected_pairs(c)) bad += cm(j, k) ? 0 : 1;
    if (kind == AnsatzKind::kSLPA) {
      for (std::size_t j = 0; j < kL - kFinal; ++j) {
        for (std::size_t k = 0; k < kL - kFinal; ++k) {
          const bool same = c.block_of(j) == c.block_of(k);
          bad += cm(j, k) == same ? 0 : 1;
        }
      }
    }
    out.require(bad == 0, to_string(kind) + ": " + std::to_string(bad) + " unexpected entries");
  }
  out.detail << "L=" << kL << ", final segment " << kFinal;
}

void check_ground_state(Outcome& out, const VerifyOptions&) {
  for (double j : {0.3, 1.7}) {
    const auto h = xxz_hamiltonian(kN, j, 0.5);
    const auto gs = ground_state(h);
    const auto& v = gs.state.amplitudes();
    const double residual = (h.matrix() * v - gs.energy * v).norm();
    const auto eig = jacobi_eigensystem(h.matrix());
    out.require(residual < 1e-8, "eigen residual " + std::to_string(residual));
    out.require(std::abs(eig.values[0] - gs.energy) < 1e-9, "ground energy is not the minimum");
  }
  out.detail << "XXZ n=" << kN;
}

void check_model_invariance(Outcome& out, const VerifyOptions& opt) {
  const auto group = parity_group(kN);
  double worst = 0.0;
  for (auto kind : {AnsatzKind::kSA, AnsatzKind::kSLPA}) {
    const auto c = build_ansatz_gates(kind, kN, 48);
    const auto o = default_observable(kind, kN);
    const auto theta = random_theta(c.num_params(), derive_seed(opt.seed, 100));
    for (int rep = 0; rep < 3; ++rep) {
      const auto phi = haar_product_state(kN, derive_seed(opt.seed, 200 + rep));
      const double h = qpr_model_output(c, theta, phi, o, 5.0);
      for (const auto& s : group.elements) {
        Statevector moved = phi;
        apply_pauli(moved, s);
        worst = std::max(worst, std::abs(qpr_model_output(c, theta, moved, o, 5.0) - h));
      }
    }
  }
  out.require(worst < 1e-10, "output changed under a stabilizer");
  out.detail << std::scientific << std::setprecision(1) << "max change " << worst;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options,
                                             const std::function<void(const CheckResult&)>& sink) {
  using CheckFn = void (*)(Outcome&, const VerifyOptions&);
  const std::pair<const char*, CheckFn> checks[] = {
      {"dla-dimensions", check_dla_dimensions},
      {"dla-graph", check_graph_properties},
      {"tradeoff", check_tradeoff},
      {"centralizer", check_centralizers},
      {"block-structure", check_block_structure},
      {"budget", check_budget},
      {"gradients", check_gradients},
      {"commutation", check_commutation_patterns},
      {"ground-state", check_ground_state},
      {"symmetry", check_model_invariance},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    Outcome out;
    try {
      fn(out, options);
      r.passed = out.passed;
      r.detail = out.text();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sink) sink(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_check_table(std::span<const CheckResult> results) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "check" << std::setw(6) << "ok" << std::setw(10)
     << "seconds"
     << "detail\n";
  for (const auto& r : results) {
    os << std::left << std::setw(18) << r.name << std::setw(6) << (r.passed ? "PASS" : "FAIL")
       << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds << r.detail << '\n';
  }
  return os.str();
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace qdla
