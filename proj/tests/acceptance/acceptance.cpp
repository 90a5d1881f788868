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


// Acceptance runner: one PASS/FAIL line per criterion. Criterion numbers can
// be passed as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"
#include "qdla/experiments.hpp"
#include "qdla/gradients.hpp"
#include "qdla/lie.hpp"
#include "qdla/random.hpp"
#include "qdla/stabilizer.hpp"

namespace qdla {
namespace {

constexpr int kN = 4;
constexpr AnsatzKind kAll[] = {AnsatzKind::kSA, AnsatzKind::kSLPA, AnsatzKind::kNSA,
                               AnsatzKind::kDE};

struct Verdict {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok) {
      passed = false;
      detail << "[" << why << "] ";
    }
  }
};

std::vector<double> random_theta(std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> t(size);
  for (auto& x : t) x = u(rng);
  return t;
}

std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

// ---------------------------------------------------------------- 1

std::size_t closure_dim(AnsatzKind kind, int n) {
  return lie_closure(build_ansatz(kind, n, 1).generators()).dim();
}

void dla_dimensions(Verdict& v) {
  const struct {
    AnsatzKind kind;
    int n;
    std::size_t want;
  } cases[] = {
      {AnsatzKind::kSA, 4, pow4(4) / 4 - 4},
      {AnsatzKind::kSA, 6, pow4(6) / 4 - 4},
      {AnsatzKind::kNSA, 4, pow4(4) - 1},
      {AnsatzKind::kDE, 4, 30},
      {AnsatzKind::kSLPA, 4, pow4(4) / 4 - 4},
  };
  for (const auto& c : cases) {
    const auto got = closure_dim(c.kind, c.n);
    v.require(got == c.want, to_string(c.kind) + " n=" + std::to_string(c.n) + " gives " +
                                 std::to_string(got));
    v.detail << to_string(c.kind) << c.n << "=" << got << " ";
  }
}

// ---------------------------------------------------------------- 2, 3

struct FeffPlan {
  AnsatzKind kind;
  std::vector<std::size_t> l_list;
  std::int64_t want;
};

// Whole-layer gate counts: the final segment adds a constant to min(M) that
// only cancels between circuits ending on the same layer boundary.
const std::vector<FeffPlan>& feff_plans() {
  static const std::vector<FeffPlan> plans = {
      {AnsatzKind::kSLPA, {48, 96, 192}, 4},
      {AnsatzKind::kSA, {36, 48, 60, 192}, 1},
      {AnsatzKind::kNSA, {36, 48, 60, 192}, 1},
      {AnsatzKind::kDE, {40, 60, 100, 200}, 2},
  };
  return plans;
}

std::vector<Rational>& measured_feff() {
  static std::vector<Rational> values;
  return values;
}

Rational deep_limit(const FeffPlan& plan, Verdict& v) {
  const auto points = f_eff_curve(plan.kind, kN, plan.l_list, 3, 0, 60);
  const auto slopes = deep_limit_estimates(points);
  Rational last{0, 1};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    v.detail << p.num_params << ":" << p.min_m << (p.mode == PartitionMode::kExact ? "e" : "g")
             << " ";
    if (i == 0) continue;
    if (!slopes[i]) {
      v.require(false, to_string(plan.kind) + " M did not grow at L=" +
                           std::to_string(p.num_params));
      continue;
    }
    v.require(slopes[i]->den == 1 && slopes[i]->num == plan.want,
              to_string(plan.kind) + " slope " + std::to_string(slopes[i]->num) + "/" +
                  std::to_string(slopes[i]->den) + " at L=" + std::to_string(p.num_params));
    last = *slopes[i];
  }
  v.require(points.back().mode == PartitionMode::kGreedy, "no greedy cross-check");
  return last;
}

void feff_limits(Verdict& v) {
  measured_feff().clear();
  for (const auto& plan : feff_plans()) {
    v.detail << to_string(plan.kind) << " { ";
    measured_feff().push_back(deep_limit(plan, v));
    v.detail << "} ";
  }
}

void tradeoff(Verdict& v) {
  if (measured_feff().size() != feff_plans().size()) {
    Verdict scratch;
    feff_limits(scratch);
  }
  for (std::size_t i = 0; i < feff_plans().size(); ++i) {
    const auto kind = feff_plans()[i].kind;
    const Rational f = measured_feff()[i];
    if (f.num <= 0) {
      v.require(false, to_string(kind) + " has no efficiency estimate");
      continue;
    }
    const auto x = static_cast<std::int64_t>(closure_dim(kind, kN));
    const auto verdict = tradeoff_verdict(x, f, kN);
    // Independent integer evaluation of both inequalities.
    const std::int64_t four_n = static_cast<std::int64_t>(pow4(kN));
    const bool upper = x * f.num * f.den <= four_n * f.den * f.den - f.num * f.num;
    const bool lower = x * f.den >= f.num;
    const bool equal = x * f.num * f.den == four_n * f.den * f.den - f.num * f.num;
    v.require(verdict.upper_ok == upper && verdict.lower_ok == lower &&
                  verdict.saturated == equal,
              to_string(kind) + " verdict disagrees with direct evaluation");
    v.require(upper && lower, to_string(kind) + " violates the trade-off");
    if (kind == AnsatzKind::kSLPA || kind == AnsatzKind::kNSA) {
      v.require(equal, to_string(kind) + " does not saturate");
    }
    v.detail << to_string(kind) << " X=" << x << " F=" << f.num << " bound="
             << verdict.upper_bound << (equal ? " (saturated) " : " ");
  }
}

// ---------------------------------------------------------------- 4

void commutation_patterns(Verdict& v) {
  constexpr std::size_t kL = 48;
  constexpr std::size_t kFinal = 24;
  constexpr std::size_t kPrefix = kL - kFinal;
  {
    const auto c = build_ansatz_gates(AnsatzKind::kSLPA, kN, kL);
    const auto cm = commutation_matrix(c, default_observable(AnsatzKind::kSLPA, kN), 3, 1e-8, 0);
    std::size_t wrong = 0;
    for (std::size_t j = 0; j < kPrefix; ++j) {
      for (std::size_t k = 0; k < kPrefix; ++k) {
        const bool same_block = j / 4 == k / 4;
        wrong += cm(j, k) == same_block ? 0 : 1;
      }
    }
    v.require(wrong == 0, "slpa: " + std::to_string(wrong) + " entries off the 4x4 pattern");
    v.detail << "slpa block-diagonal over the first " << kPrefix << " gates; ";
  }
  for (auto kind : {AnsatzKind::kSA, AnsatzKind::kNSA}) {
    const auto c = build_ansatz_gates(kind, kN, kL);
    const auto o = default_observable(kind, kN);
    const auto cm = commutation_matrix(c, o, 3, 1e-8, 0);
    const auto forbidden = predicted_incompatible_pairs(c, o, kPrefix);
    std::size_t wrong = 0;
    for (auto [j, k] : forbidden) wrong += cm(j, k) ? 1 : 0;
    v.require(wrong == 0, to_string(kind) + ": " + std::to_string(wrong) +
                              " forbidden pairs measured compatible");
    v.detail << to_string(kind) << " " << forbidden.size() << " forbidden pairs clean; ";
  }
}

// ---------------------------------------------------------------- 5

void gradient_correctness(Verdict& v) {
  double worst_fd = 0.0;
  double worst_vanishing = 0.0;
  int vanishing = 0;
  Rng rng(5);
  std::uniform_int_distribution<std::size_t> length(6, 60);
  // Relative error is undefined when the exact gradient vanishes; such draws
  // get an absolute check and are replaced.
  for (int t = 0, cases = 0; cases < 50; ++t) {
    const auto kind = kAll[t % 4];
    const auto c = build_ansatz_gates(kind, kN, length(rng));
    const auto o = default_observable(kind, kN);
    const auto theta = random_theta(c.num_params(), derive_seed(5, 2 * static_cast<std::uint64_t>(t)));
    const auto input = haar_product_state(kN, derive_seed(5, 2 * static_cast<std::uint64_t>(t) + 1));
    const auto ps = parameter_shift_gradient(c, theta, input, o, 0, 0).gradient;
    const auto fd = finite_difference_gradient(c, theta, input, o, 1e-5);
    double diff = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      diff = std::max(diff, std::abs(ps[j] - fd[j]));
      scale = std::max(scale, std::abs(ps[j]));
    }
    if (scale < 1e-12) {
      ++vanishing;
      worst_vanishing = std::max(worst_vanishing, diff);
      continue;
    }
    worst_fd = std::max(worst_fd, diff / scale);
    ++cases;
  }
  v.require(worst_vanishing < 1e-9, "vanishing gradient estimated as " + std::to_string(worst_vanishing));
  double worst_lcu = 0.0;
  for (std::size_t l : {48, 60, 96, 144}) {
    const auto c = build_ansatz_gates(AnsatzKind::kSLPA, kN, l);
    const auto o = default_observable(AnsatzKind::kSLPA, kN);
    for (std::uint64_t rep = 0; rep < 3; ++rep) {
      const auto theta = random_theta(l, derive_seed(l, rep));
      const auto input = haar_product_state(kN, derive_seed(l, rep + 10));
      const auto ps = parameter_shift_gradient(c, theta, input, o, 0, 0).gradient;
      const auto lcu = lcu_gradient(c, theta, input, o, 0, 0).gradient;
      for (std::size_t j = 0; j < l; ++j) worst_lcu = std::max(worst_lcu, std::abs(ps[j] - lcu[j]));
    }
  }
  v.require(worst_fd < 1e-6, "finite-difference relative error " + std::to_string(worst_fd));
  v.require(worst_lcu < 1e-10, "LCU deviation " + std::to_string(worst_lcu));
  v.detail << "fd rel " << worst_fd << " (" << vanishing << " vanishing draws replaced), lcu abs "
           << worst_lcu;
}

// ---------------------------------------------------------------- 6

void budget_identity(Verdict& v) {
  for (std::size_t l : {48, 96, 192}) {
    const auto c = build_ansatz_gates(AnsatzKind::kSLPA, kN, l);
    const auto o = default_observable(AnsatzKind::kSLPA, kN);
    const auto group = parity_group(kN);
    bool commutes_with_group = true;
    for (const auto& s : group.elements) commutes_with_group = commutes_with_group && commutes(o, s);
    v.require(commutes_with_group, "observable does not commute with S");
    const auto ps = measurement_budget(c, GradientMethod::kParameterShift, o);
    const auto lcu = measurement_budget(c, GradientMethod::kLcuBlocks, o);
    const auto theta = random_theta(l, l);
    const auto input = haar_product_state(kN, 1);
    const auto ps_run = parameter_shift_gradient(c, theta, input, o, 0, 0).circuits;
    const auto lcu_run = lcu_gradient(c, theta, input, o, 0, 0).circuits;
    v.require(ps == 2 * l && ps_run == ps, "parameter shift uses " + std::to_string(ps_run));
    v.require(lcu * 4 == l && lcu_run == lcu, "LCU uses " + std::to_string(lcu_run));
    v.require(ps == 8 * lcu, "ratio is not 8 at L=" + std::to_string(l));
    v.detail << "L=" << l << ": " << ps << "/" << lcu << " ";
  }
}

// ---------------------------------------------------------------- 7

void centralizers(Verdict& v) {
  const std::vector<std::vector<std::string>> groups = {
      {"Z"},          {"XX", "ZZ"},   {"ZZI", "IZZ"},  {"XXX"},
      {"XXXX", "ZZZZ"}, {"ZZII", "IIZZ"}, {"XXXX"},   {"ZIII", "IXII", "IIYI"},
      {"XZZX", "ZXXZ"}, {"ZZZZ", "XXII", "IIXX"}, {"ZIII", "IZII", "IIZI", "IIIZ"},
  };
  std::size_t checked = 0;
  for (const auto& labels : groups) {
    std::vector<PauliString> gens;
    for (const auto& l : labels) gens.push_back(PauliString::from_label(l));
    const int n = gens.front().num_qubits();
    const auto group = stabilizer_closure(n, gens);
    std::uint64_t count = 0;
    const std::uint64_t side = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < side; ++x) {
      for (std::uint64_t z = 0; z < side; ++z) {
        const auto p = PauliString::from_bits(n, x, z);
        bool all = true;
        for (const auto& s : group.elements) all = all && commutes(p, s);
        count += all ? 1 : 0;
      }
    }
    v.require(count == centralizer_dim(group),
              labels.front() + ": brute force " + std::to_string(count));
    ++checked;
  }
  // The parity groups behind the ansatz circuits.
  for (int n : {2, 4}) {
    const auto group = parity_group(n);
    std::uint64_t count = 0;
    const std::uint64_t side = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < side; ++x) {
      for (std::uint64_t z = 0; z < side; ++z) {
        bool all = true;
        for (const auto& s : group.elements) all = all && commutes(PauliString::from_bits(n, x, z), s);
        count += all ? 1 : 0;
      }
    }
    v.require(count == centralizer_dim(group), "parity n=" + std::to_string(n));
    ++checked;
  }
  v.detail << checked << " groups";
}

// ---------------------------------------------------------------- 8

// Distance <= 2 between every connected pair: adjacent or a common neighbour.
void short_paths(Verdict& v) {
  const struct {
    AnsatzKind kind;
    int n;
  } cases[] = {{AnsatzKind::kSA, 4}, {AnsatzKind::kSA, 6}, {AnsatzKind::kNSA, 4},
               {AnsatzKind::kDE, 4}, {AnsatzKind::kSLPA, 4}};
  for (const auto& c : cases) {
    const auto basis = lie_closure(build_ansatz(c.kind, c.n, 1).generators());
    const auto& e = basis.elements;
    const std::size_t size = e.size();
    const std::size_t words = (size + 63) / 64;
    std::vector<std::uint64_t> adj(size * words, 0);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (i != j && !commutes(e[i], e[j])) adj[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
    std::vector<std::size_t> comp(size, size);
    for (std::size_t root = 0; root < size; ++root) {
      if (comp[root] != size) continue;
      std::vector<std::size_t> stack{root};
      comp[root] = root;
      while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < size; ++w) {
          if ((adj[u * words + w / 64] >> (w % 64) & 1) && comp[w] == size) {
            comp[w] = root;
            stack.push_back(w);
          }
        }
      }
    }
    std::size_t far = 0, pairs = 0;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (comp[i] != comp[j]) continue;
        ++pairs;
        if (adj[i * words + j / 64] >> (j % 64) & 1) continue;
        bool shared = false;
        for (std::size_t w = 0; w < words && !shared; ++w) shared = (adj[i * words + w] & adj[j * words + w]) != 0;
        far += shared ? 0 : 1;
      }
    }
    v.require(far == 0, to_string(c.kind) + std::to_string(c.n) + ": " + std::to_string(far) +
                            " pairs beyond distance 2");
    v.detail << to_string(c.kind) << c.n << " " << pairs << " pairs; ";
  }
}

// ---------------------------------------------------------------- 9

struct RunSet {
  std::vector<std::vector<TrainRecord>> runs;
  double median_at(std::size_t record, bool test) const {
    std::vector<double> xs;
    for (const auto& r : runs) {
      const auto& rec = r[std::min(record, r.size() - 1)];
      xs.push_back(test ? rec.test_loss : rec.train_loss);
    }
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
  }
  double median_final() const {
    std::size_t longest = 0;
    for (const auto& r : runs) longest = std::max(longest, r.size());
    return median_at(longest - 1, true);
  }
};

RunSet train_three(TrainConfig cfg) {
  RunSet s;
  for (std::uint64_t seed = 0; seed < 3; ++seed) s.runs.push_back(run_symmetric_learning(cfg, seed));
  return s;
}

void fig4_qualitative(Verdict& v) {
  constexpr std::size_t kSaSteps = 5000;
  TrainConfig base;
  base.n = kN;
  base.num_params = 96;
  base.shots = 1000;
  base.train_size = 50;
  base.test_size = 50;

  TrainConfig sa = base;
  sa.ansatz = AnsatzKind::kSA;
  sa.max_steps = kSaSteps;
  sa.eval_every = 50;
  TrainConfig nsa = sa;
  nsa.ansatz = AnsatzKind::kNSA;
  // Eight times the steps: the block estimator costs one eighth per step.
  TrainConfig slpa = base;
  slpa.ansatz = AnsatzKind::kSLPA;
  slpa.max_steps = 8 * kSaSteps;
  slpa.eval_every = 400;

  const auto sa_runs = train_three(sa);
  const auto slpa_runs = train_three(slpa);
  const auto nsa_runs = train_three(nsa);

  const double sa_final = sa_runs.median_final();
  const std::uint64_t sa_shots = sa_runs.runs.front().back().cumulative_shots;
  std::optional<std::uint64_t> reached;
  const auto& slpa_rec = slpa_runs.runs.front();
  for (std::size_t i = 0; i < slpa_rec.size() && !reached; ++i) {
    if (slpa_runs.median_at(i, true) <= sa_final) reached = slpa_rec[i].cumulative_shots;
  }
  const double nsa_final = nsa_runs.median_final();
  v.require(reached.has_value(), "SLPA never reached the SA final test loss");
  if (reached) {
    v.require(4 * *reached <= sa_shots, "SLPA needed " + std::to_string(*reached) + " of " +
                                            std::to_string(sa_shots) + " shots");
  }
  v.require(nsa_final >= 2.0 * sa_final, "NSA final loss below twice SA's");
  v.detail << "SA final " << sa_final << " at " << static_cast<double>(sa_shots)
           << " shots; SLPA reaches it at "
           << (reached ? static_cast<double>(*reached) : -1.0) << "; SLPA final "
           << slpa_runs.median_final() << "; NSA final " << nsa_final;
}

// ---------------------------------------------------------------- 10

void barren_plateaus(Verdict& v) {
  constexpr AnsatzKind kinds[] = {AnsatzKind::kSA, AnsatzKind::kSLPA, AnsatzKind::kNSA};
  const std::vector<std::pair<int, std::vector<std::size_t>>> grids = {
      {4, {8, 12, 16, 24, 36, 48, 72, 96, 144, 192, 288, 384, 576}},
      {6, {24, 32, 36, 54, 72, 108, 144, 216, 288, 432, 576}},
  };
  for (const auto& [n, ls] : grids) {
    const int ns[] = {n};
    const auto records = bp_variance_scan(kinds, ns, ls, 2000, 1);
    const auto series = [&](AnsatzKind kind) {
      std::vector<ScanRecord> out;
      for (const auto& r : records) {
        if (r.kind == kind) out.push_back(r);
      }
      return out;
    };
    const auto sa = series(AnsatzKind::kSA);
    const auto slpa = series(AnsatzKind::kSLPA);
    const auto nsa = series(AnsatzKind::kNSA);
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

    // Beyond the shallow regime, on layer boundaries, within three standard errors.
    double worst_z = 0.0;
    for (auto kind : kinds) {
      const std::size_t shallow = nn * (kind == AnsatzKind::kSLPA ? 4 : 1);
      const std::size_t layer = gates_per_layer(kind, n);
      std::vector<ScanRecord> deep;
      for (const auto& r : series(kind)) {
        if (r.num_params >= shallow && r.num_params % layer == 0) deep.push_back(r);
      }
      v.require(deep.size() >= 3, to_string(kind) + " has too few deep points");
      for (std::size_t i = 0; i + 1 < deep.size(); ++i) {
        const double se = std::hypot(deep[i].variance_se, deep[i + 1].variance_se);
        const double z = (deep[i + 1].variance - deep[i].variance) / se;
        worst_z = std::max(worst_z, z);
        v.require(z <= 3.0, to_string(kind) + " n=" + std::to_string(n) + " variance grows from L=" +
                                std::to_string(deep[i].num_params));
      }
    }

    std::size_t shallow_pairs = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sa[i].num_params > nn) continue;
      if (sa[i].variance <= 1e-12 || slpa[i].variance <= 1e-12) continue;
      ++shallow_pairs;
      v.require(slpa[i].variance > sa[i].variance,
                "shallow n=" + std::to_string(n) + " L=" + std::to_string(sa[i].num_params));
    }
    v.require(shallow_pairs > 0, "no shallow comparison at n=" + std::to_string(n));

    v.require(nsa.back().variance < sa.back().variance,
              "deep NSA variance not below SA at n=" + std::to_string(n));
    v.detail << "n=" << n << ": max z " << worst_z << ", " << shallow_pairs
             << " shallow pairs, deep NSA " << nsa.back().variance << " < SA "
             << sa.back().variance << "; ";
  }
}

// ---------------------------------------------------------------- 11

void phase_recognition(Verdict& v) {
  constexpr int n = 8;
  constexpr std::size_t kL = 768;
  TrainConfig base;
  base.n = n;
  base.num_params = kL;
  base.shots = 1000;
  base.train_size = 60;
  base.test_size = 150;
  base.max_steps = 1'000'000;
  // Twenty parameter-shift steps: 2L circuits of 1000 shots each.
  base.shot_budget = 20 * 2 * kL * 1000;
  base.eval_every = 1'000'000;

  double acc[3] = {0, 0, 0};
  const AnsatzKind kinds[] = {AnsatzKind::kSA, AnsatzKind::kSLPA, AnsatzKind::kNSA};
  for (int k = 0; k < 3; ++k) {
    TrainConfig cfg = base;
    cfg.ansatz = kinds[k];
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const auto rec = run_qpr(cfg, seed);
      const auto circuit = build_ansatz_gates(kinds[k], n, kL);
      const std::uint64_t step_shots =
          measurement_budget(circuit, effective_method(cfg), default_observable(kinds[k], n)) *
          cfg.shots;
      const std::uint64_t spent = rec.back().cumulative_shots;
      v.require(spent <= base.shot_budget && spent + step_shots > base.shot_budget,
                to_string(kinds[k]) + " spent " + std::to_string(spent));
      if (seed == 0) v.detail << to_string(kinds[k]) << " " << spent << " shots; ";
      acc[k] += *rec.back().test_accuracy / 2.0;
    }
  }
  v.require(acc[0] >= acc[2] + 0.05, "SA accuracy not 5 points above NSA");
  v.require(acc[1] >= acc[2] + 0.05, "SLPA accuracy not 5 points above NSA");

  const auto group = parity_group(n);
  TrainConfig data_cfg = base;
  const auto data = qpr_dataset(data_cfg, 4, 77);
  double worst = 0.0;
  for (auto kind : {AnsatzKind::kSA, AnsatzKind::kSLPA}) {
    const auto c = build_ansatz_gates(kind, n, kL);
    const auto o = default_observable(kind, n);
    const auto theta = random_theta(kL, 9);
    for (const auto& ex : data) {
      const double h = qpr_model_output(c, theta, ex.state, o, base.gamma);
      for (const auto& s : group.elements) {
        Statevector moved = ex.state;
        apply_pauli(moved, s);
        worst = std::max(worst, std::abs(qpr_model_output(c, theta, moved, o, base.gamma) - h));
      }
    }
  }
  v.require(worst < 1e-10, "model output changes under S by " + std::to_string(worst));
  v.detail << "accuracy SA " << acc[0] << " SLPA " << acc[1] << " NSA " << acc[2]
           << "; max change under S " << worst;
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Verdict&)> run;
};

}  // namespace
}  // namespace qdla

int main(int argc, char** argv) {
  using namespace qdla;
  const std::vector<Criterion> criteria = {
      {1, "dla-dimensions", dla_dimensions},
      {2, "deep-limit-efficiency", feff_limits},
      {3, "tradeoff-verdicts", tradeoff},
      {4, "commutation-patterns", commutation_patterns},
      {5, "gradient-correctness", gradient_correctness},
      {6, "budget-identity", budget_identity},
      {7, "centralizer-brute-force", centralizers},
      {8, "short-anticommutation-paths", short_paths},
      {9, "training-shot-efficiency", fig4_qualitative},
      {10, "variance-scan", barren_plateaus},
      {11, "phase-recognition", phase_recognition},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += v.passed ? 0 : 1;
    std::printf("%s %2d %-28s (%.1fs) %s\n", v.passed ? "PASS" : "FAIL", c.id, c.name, secs,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
