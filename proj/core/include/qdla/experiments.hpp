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
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdla/circuit.hpp"
#include "qdla/optim.hpp"
#include "qdla/simulator.hpp"
#include "qdla/stabilizer.hpp"

namespace qdla {

enum class SampleOrder { kUniform, kCyclic };
std::string to_string(SampleOrder order);
SampleOrder parse_sample_order(std::string_view name);

struct TrainConfig {
  AnsatzKind ansatz = AnsatzKind::kSLPA;
  int n = 4;
  std::size_t num_params = 96;
  std::uint64_t shots = 1000;  ///< per circuit; 0 means exact expectations
  /// Defaults to the block LCU estimator for SLPA and the parameter shift
  /// otherwise.
  std::optional<GradientMethod> method;
  AdamConfig optimizer;
  std::size_t train_size = 50;
  std::size_t test_size = 50;
  SampleOrder order = SampleOrder::kUniform;
  std::size_t max_steps = 2000;
  /// Stop before any step that would take the cumulative shot count past
  /// this value (0: no limit).
  std::uint64_t shot_budget = 0;
  std::size_t eval_every = 50;
  /// Initial parameters are uniform in [-init_range, init_range].
  double init_range = std::numbers::pi;

  // Phase recognition only.
  double delta = 0.5;
  double j_max = 2.0;
  double j_critical = 1.0;
  double noise_std = std::numbers::pi / 10.0;
  double gamma = 5.0;
};

GradientMethod effective_method(const TrainConfig& config);
/// Throws InvalidInput naming the offending field.
void validate(const TrainConfig& config);

struct TrainRecord {
  std::size_t step = 0;
  std::uint64_t cumulative_shots = 0;
  double train_loss = 0.0;
  double test_loss = 0.0;
  std::optional<double> test_accuracy;
};

using RecordSink = std::function<void(const TrainRecord&)>;

struct Example {
  Statevector state;
  double label = 0.0;
};

/// A stabilizer-symmetric target f(ρ) = Tr[U ρ U^† O]: a symmetric-ansatz
/// circuit of ceil(4 dim(g) / 3n) layers with angles uniform in [-π, π].
struct SymmetricTarget {
  Circuit circuit;
  std::vector<double> theta;
  PauliString observable;
  double operator()(const Statevector& state) const;
};

/// Throws InvalidInput when the generated circuit does not commute with S.
SymmetricTarget gen_symmetric_target(int n, const StabilizerGroup& group, std::uint64_t seed);

/// Haar product inputs labelled by the target.
std::vector<Example> symmetric_dataset(const SymmetricTarget& target, std::size_t count,
                                       std::uint64_t seed);

/// Noisy ground states R(α, β)|g(J)> with J uniform in [0, j_max], α_j and
/// β_j normal with standard deviation noise_std, labelled 1 for J <= j_c.
std::vector<Example> qpr_dataset(const TrainConfig& config, std::size_t count, std::uint64_t seed);

/// Symmetric-function regression with MSE loss and single-example Adam
/// steps. Every step estimates the prediction h(x) from one circuit (not part
/// of the gradient budget) and the gradient with the configured estimator;
/// cumulative shots count gradient circuits times shots. Losses are exact.
std::vector<TrainRecord> run_symmetric_learning(const TrainConfig& config, std::uint64_t seed,
                                                const RecordSink& sink = {});

/// Logistic model p1 = 1 / (1 + exp(-γ <O>)) trained with cross entropy on
/// phase-recognition data; records carry the test accuracy.
std::vector<TrainRecord> run_qpr(const TrainConfig& config, std::uint64_t seed,
                                 const RecordSink& sink = {});

/// γ <φ|U^† O U|φ>.
double qpr_model_output(const Circuit& circuit, std::span<const double> theta,
                        const Statevector& state, const PauliString& observable, double gamma);

struct ScanRecord {
  AnsatzKind kind = AnsatzKind::kSA;
  int n = 0;
  std::size_t num_params = 0;
  double mean = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;  ///< standard error of the variance estimate
  std::size_t samples = 0;
};

/// Var_θ C(θ) for θ uniform in [-π/2, π/2]^L, input |0...0>, default
/// observable; exact cost evaluations.
std::vector<ScanRecord> bp_variance_scan(std::span<const AnsatzKind> kinds,
                                         std::span<const int> n_list,
                                         std::span<const std::size_t> l_list,
                                         std::size_t num_samples, std::uint64_t seed,
                                         const std::function<void(const ScanRecord&)>& sink = {});

}  // namespace qdla
