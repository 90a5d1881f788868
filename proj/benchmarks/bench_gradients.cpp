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


#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "qdla/ansatz.hpp"
#include "qdla/gradients.hpp"
#include "qdla/partition.hpp"

namespace {

std::vector<double> angles(std::size_t size) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> t(size);
  for (auto& x : t) x = u(rng);
  return t;
}

void BM_ParameterShift(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const auto c = qdla::build_ansatz_gates(qdla::AnsatzKind::kSA, 4, l);
  const auto o = qdla::default_observable(qdla::AnsatzKind::kSA, 4);
  const auto theta = angles(l);
  const auto s = qdla::haar_product_state(4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::parameter_shift_gradient(c, theta, s, o, 1000, 1).circuits);
  }
}
BENCHMARK(BM_ParameterShift)->Arg(48)->Arg(96)->Arg(192);

void BM_LcuGradient(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const auto c = qdla::build_ansatz_gates(qdla::AnsatzKind::kSLPA, 4, l);
  const auto o = qdla::default_observable(qdla::AnsatzKind::kSLPA, 4);
  const auto theta = angles(l);
  const auto s = qdla::haar_product_state(4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::lcu_gradient(c, theta, s, o, 1000, 1).circuits);
  }
}
BENCHMARK(BM_LcuGradient)->Arg(48)->Arg(96)->Arg(192);

void BM_CommutationMatrix(benchmark::State& state) {
  const auto c = qdla::build_ansatz_gates(qdla::AnsatzKind::kSLPA, 4, 48);
  const auto o = qdla::default_observable(qdla::AnsatzKind::kSLPA, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::commutation_matrix(c, o, 1).size());
  }
}
BENCHMARK(BM_CommutationMatrix)->Unit(benchmark::kMillisecond);

void BM_ExactPartition(benchmark::State& state) {
  const auto c = qdla::build_ansatz_gates(qdla::AnsatzKind::kSLPA, 4, 48);
  const auto cm = qdla::commutation_matrix(c, qdla::default_observable(qdla::AnsatzKind::kSLPA, 4), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qdla::min_measurement_partition(cm, qdla::PartitionMode::kExact).num_groups());
  }
}
BENCHMARK(BM_ExactPartition)->Unit(benchmark::kMillisecond);

}  // namespace
