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

#include "qdla/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"
#include "qdla/gradients.hpp"
#include "qdla/hermitian.hpp"
#include "qdla/lie.hpp"
#include "qdla/random.hpp"

namespace qdla {
namespace {

enum SeedStream : std::uint64_t {
  kInitStream = 1,
  kTrainDataStream,
  kTestDataStream,
  kTargetStream,
  kOrderStream,
  kShotStream,
};

enum class Loss { kMse, kCrossEntropy };

double sigmoid(double h) { return 1.0 / (1.0 + std::exp(-h)); }

struct Model {
  Circuit circuit;
  PauliString observable;
  Loss loss;
  double gamma = 1.0;

  double output(std::span<const double> theta, const Statevector& x) const {
    return gamma * cost(circuit, theta, x, observable);
  }
  double example_loss(double h, double y) const {
    if (loss == Loss::kMse) return (h - y) * (h - y);
    const double p = std::clamp(sigmoid(h), 1e-15, 1.0 - 1e-15);
    return -(y * std::log(p) + (1.0 - y) * std::log(1.0 - p));
  }
  /// d loss / d h.
  double loss_slope(double h, double y) const {
    return loss == Loss::kMse ? 2.0 * (h - y) : sigmoid(h) - y;
  }
};

struct Evaluation {
  double loss = 0.0;
  double accuracy = 0.0;
};

Evaluation evaluate(const Model& model, std::span<const double> theta,
                    const std::vector<Example>& data) {
  Evaluation e;
  for (const auto& ex : data) {
    const double h = model.output(theta, ex.state);
    e.loss += model.example_loss(h, ex.label);
    e.accuracy += ((h >= 0.0 ? 1.0 : 0.0) == ex.label) ? 1.0 : 0.0;
  }
  e.loss /= static_cast<double>(data.size());
  e.accuracy /= static_cast<double>(data.size());
  return e;
}

std::vector<TrainRecord> train(const TrainConfig& config, std::uint64_t seed, const Model& model,
                               const std::vector<Example>& train_set,
                               const std::vector<Example>& test_set, const RecordSink& sink) {
  const GradientMethod method = effective_method(config);
  const std::size_t l = model.circuit.num_params();
  Rng init_rng(derive_seed(seed, kInitStream));
  std::uniform_real_distribution<double> init(-config.init_range, config.init_range);
  std::vector<double> theta(l);
  for (auto& t : theta) t = init(init_rng);

  Rng order_rng(derive_seed(seed, kOrderStream));
  std::uniform_int_distribution<std::size_t> pick(0, train_set.size() - 1);
  AdamState adam;
  std::vector<TrainRecord> records;
  std::uint64_t shots_used = 0;
  const bool classify = model.loss == Loss::kCrossEntropy;

  const auto emit = [&](std::size_t step) {
    TrainRecord r;
    r.step = step;
    r.cumulative_shots = shots_used;
    r.train_loss = evaluate(model, theta, train_set).loss;
    const Evaluation test = evaluate(model, theta, test_set);
    r.test_loss = test.loss;
    if (classify) r.test_accuracy = test.accuracy;
    records.push_back(r);
    if (sink) sink(r);
  };

  const std::uint64_t step_shots =
      static_cast<std::uint64_t>(measurement_budget(model.circuit, method, model.observable)) *
      config.shots;
  const auto budget_allows = [&](std::uint64_t used) {
    return config.shot_budget == 0 || used + step_shots <= config.shot_budget;
  };

  emit(0);
  std::vector<double> grad(l);
  for (std::size_t step = 1; step <= config.max_steps; ++step) {
    if (!budget_allows(shots_used)) break;
    const std::size_t i =
        config.order == SampleOrder::kCyclic ? (step - 1) % train_set.size() : pick(order_rng);
    const Example& ex = train_set[i];
    const std::uint64_t step_seed = derive_seed(derive_seed(seed, kShotStream), step);

    double expval = cost(model.circuit, theta, ex.state, model.observable);
    if (config.shots > 0) {
      expval = sample_from_expectation(expval, config.shots, derive_seed(step_seed, 0));
    }
    const double slope = model.loss_slope(model.gamma * expval, ex.label) * model.gamma;

    const GradientEstimate g =
        method == GradientMethod::kParameterShift
            ? parameter_shift_gradient(model.circuit, theta, ex.state, model.observable,
                                       config.shots, derive_seed(step_seed, 1))
            : lcu_gradient(model.circuit, theta, ex.state, model.observable, config.shots,
                           derive_seed(step_seed, 1));
    for (std::size_t p = 0; p < l; ++p) grad[p] = slope * g.gradient[p];
    adam_step(theta, grad, adam, config.optimizer);
    shots_used += static_cast<std::uint64_t>(g.circuits) * config.shots;

    const bool last = step == config.max_steps || !budget_allows(shots_used);
    if (step % config.eval_every == 0 || last) emit(step);
  }
  return records;
}

}  // namespace

std::string to_string(SampleOrder order) {
  return order == SampleOrder::kUniform ? "uniform" : "cyclic";
}

SampleOrder parse_sample_order(std::string_view name) {
  if (name == "uniform") return SampleOrder::kUniform;
  if (name == "cyclic") return SampleOrder::kCyclic;
  throw InvalidInput("unknown sample order \"" + std::string(name) +
                     "\" (expected uniform or cyclic)");
}

GradientMethod effective_method(const TrainConfig& config) {
  if (config.method) return *config.method;
  return config.ansatz == AnsatzKind::kSLPA ? GradientMethod::kLcuBlocks
                                            : GradientMethod::kParameterShift;
}

void validate(const TrainConfig& c) {
  validate(c.optimizer);
  if (c.num_params == 0) throw InvalidInput("num_params must be positive");
  if (c.train_size == 0) throw InvalidInput("dataset.train_size must be positive");
  if (c.test_size == 0) throw InvalidInput("dataset.test_size must be positive");
  if (c.eval_every == 0) throw InvalidInput("eval_every must be positive");
  if (!(c.init_range >= 0.0)) throw InvalidInput("init_range must be non-negative");
  if (!(c.noise_std >= 0.0)) throw InvalidInput("dataset.noise_std must be non-negative");
  if (!(c.j_max > 0.0)) throw InvalidInput("dataset.j_max must be positive");
  if (c.ansatz == AnsatzKind::kCustom) throw InvalidInput("ansatz must be sa, slpa, nsa or de");
  if (effective_method(c) == GradientMethod::kLcuBlocks && c.ansatz != AnsatzKind::kSLPA) {
    throw InvalidInput("gradient method lcu needs the slpa ansatz");
  }
}

double SymmetricTarget::operator()(const Statevector& state) const {
  return cost(circuit, theta, state, observable);
}

SymmetricTarget gen_symmetric_target(int n, const StabilizerGroup& group, std::uint64_t seed) {
  const auto layer = sa_layer(n);
  const std::size_t dim = lie_closure(layer).dim();
  const int layers = static_cast<int>((4 * dim + 3 * static_cast<std::size_t>(n) - 1) /
                                      (3 * static_cast<std::size_t>(n)));
  SymmetricTarget t{build_ansatz(AnsatzKind::kSA, n, layers), {}, default_observable(AnsatzKind::kSA, n)};
  if (group.n != n || !check_circuit_symmetry(t.circuit, group)) {
    throw InvalidInput("target circuit does not commute with the given stabilizer group");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  t.theta.resize(t.circuit.num_params());
  for (auto& x : t.theta) x = angle(rng);
  return t;
}

std::vector<Example> symmetric_dataset(const SymmetricTarget& target, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<Example> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Statevector x = haar_product_state(target.circuit.num_qubits(), derive_seed(seed, i));
    const double y = target(x);
    out.push_back({std::move(x), y});
  }
  return out;
}

std::vector<Example> qpr_dataset(const TrainConfig& config, std::size_t count, std::uint64_t seed) {
  const int n = config.n;
  Rng rng(seed);
  std::uniform_real_distribution<double> coupling(0.0, config.j_max);
  std::normal_distribution<double> noise(0.0, config.noise_std);
  std::vector<Example> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double j = coupling(rng);
    Statevector s = ground_state(xxz_hamiltonian(n, j, config.delta)).state;
    for (int q = 0; q < n; ++q) {
      const double alpha = noise(rng);
      const double beta = noise(rng);
      apply_pauli_rotation(s, PauliString::single(n, q, 'X'), alpha);
      apply_pauli_rotation(s, PauliString::single(n, q, 'Y'), beta);
    }
    out.push_back({std::move(s), j <= config.j_critical ? 1.0 : 0.0});
  }
  return out;
}

std::vector<TrainRecord> run_symmetric_learning(const TrainConfig& config, std::uint64_t seed,
                                                const RecordSink& sink) {
  validate(config);
  const StabilizerGroup group = parity_group(config.n);
  const SymmetricTarget target = gen_symmetric_target(config.n, group, derive_seed(seed, kTargetStream));
  const auto train_set = symmetric_dataset(target, config.train_size, derive_seed(seed, kTrainDataStream));
  const auto test_set = symmetric_dataset(target, config.test_size, derive_seed(seed, kTestDataStream));
  Model model{build_ansatz_gates(config.ansatz, config.n, config.num_params),
              default_observable(config.ansatz, config.n), Loss::kMse, 1.0};
  return train(config, seed, model, train_set, test_set, sink);
}

double qpr_model_output(const Circuit& circuit, std::span<const double> theta,
                        const Statevector& state, const PauliString& observable, double gamma) {
  return gamma * cost(circuit, theta, state, observable);
}

std::vector<TrainRecord> run_qpr(const TrainConfig& config, std::uint64_t seed,
                                 const RecordSink& sink) {
  validate(config);
  const auto train_set = qpr_dataset(config, config.train_size, derive_seed(seed, kTrainDataStream));
  const auto test_set = qpr_dataset(config, config.test_size, derive_seed(seed, kTestDataStream));
  Model model{build_ansatz_gates(config.ansatz, config.n, config.num_params),
              default_observable(config.ansatz, config.n), Loss::kCrossEntropy, config.gamma};
  return train(config, seed, model, train_set, test_set, sink);
}

std::vector<ScanRecord> bp_variance_scan(std::span<const AnsatzKind> kinds,
                                         std::span<const int> n_list,
                                         std::span<const std::size_t> l_list,
                                         std::size_t num_samples, std::uint64_t seed,
                                         const std::function<void(const ScanRecord&)>& sink) {
  if (num_samples < 2) throw InvalidInput("variance scan needs at least two samples");
  std::vector<ScanRecord> out;
  std::uint64_t task = 0;
  for (AnsatzKind kind : kinds) {
    for (int n : n_list) {
      const PauliString observable = default_observable(kind, n);
      const Statevector zero(n);
      for (std::size_t l : l_list) {
        const Circuit c = build_ansatz_gates(kind, n, l);
        Rng rng(derive_seed(seed, task++));
        std::uniform_real_distribution<double> angle(-std::numbers::pi / 2, std::numbers::pi / 2);
        std::vector<double> theta(l);
        std::vector<double> values(num_samples);
        for (auto& v : values) {
          for (auto& t : theta) t = angle(rng);
          v = cost(c, theta, zero, observable);
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(num_samples);
        double m2 = 0.0;
        double m4 = 0.0;
        for (double v : values) {
          const double d = (v - mean) * (v - mean);
          m2 += d;
          m4 += d * d;
        }
        const double count = static_cast<double>(num_samples);
        ScanRecord r;
        r.kind = kind;
        r.n = n;
        r.num_params = l;
        r.mean = mean;
        r.variance = m2 / (count - 1.0);
        const double pop_var = m2 / count;
        r.variance_se = std::sqrt(std::max(0.0, m4 / count - pop_var * pop_var) / count);
        r.samples = num_samples;
        out.push_back(r);
        if (sink) sink(r);
      }
    }
  }
  return out;
}

}  // namespace qdla
