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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdla/experiments.hpp"
#include "qdla/gradients.hpp"
#include "qdla/lie.hpp"

namespace qdla {

/// Library version, e.g. "0.1.0".
std::string version_string();

/// An experiment run description as read from a JSON config file.
struct RunSpec {
  std::string experiment = "symmetric";  ///< "symmetric" or "qpr"
  TrainConfig config;
  std::vector<std::uint64_t> seeds = {0, 1, 2};
  std::string output_path;
};

/// Parses a run config. Recognised keys: experiment, ansatz, n, layers or
/// num_params, shots, method, max_steps, shot_budget, eval_every,
/// init_range, optimizer{lr, beta1, beta2, epsilon}, dataset{train_size,
/// test_size, order, delta, j_max, j_critical, noise_std, gamma}, seeds,
/// output_path. Unknown keys and type errors throw ParseError naming the key
/// path (e.g. "optimizer.lr").
RunSpec parse_run_spec(const nlohmann::json& doc);
RunSpec load_run_spec(const std::filesystem::path& path);

nlohmann::json to_json(const TrainConfig& config);
nlohmann::json to_json(const RunSpec& spec);
/// {n, ansatz, num_params, gates: [{label, param_index, block}], blocks:
/// [[begin, end], ...]}; block fields only for block circuits.
nlohmann::json circuit_to_json(const Circuit& circuit);
nlohmann::json dla_report_json(const std::vector<PauliString>& generators, const DlaGraph& graph,
                               const DlaDecomposition& dec, std::optional<Rational> f_eff);

/// [seed,]step,cumulative_shots,train_loss,test_loss[,test_accuracy]; the
/// header is omitted when `header` is false so runs can be concatenated.
std::string train_csv(std::span<const TrainRecord> records, bool with_accuracy,
                      std::optional<std::uint64_t> seed = std::nullopt, bool header = true);
/// ansatz,n,L,variance,variance_se,mean,samples
std::string scan_csv(std::span<const ScanRecord> records);
/// ansatz,n,L,min_M,f_eff,mode,samples,f_eff_finite,estimator
std::string feff_csv(AnsatzKind kind, int n, std::span<const FeffPoint> points);

/// Writes through a temporary sibling file and renames it into place.
/// Throws ResourceError on I/O failure.
void atomic_write(const std::filesystem::path& path, std::string_view content);

}  // namespace qdla
