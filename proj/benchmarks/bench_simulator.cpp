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


#include <benchmark/benchmark.h>

#include "qdla/ansatz.hpp"
#include "qdla/simulator.hpp"

namespace {

void BM_PauliRotation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = qdla::haar_product_state(n, 1);
  const auto p = qdla::PauliString::pair(n, 0, n - 1, 'Y');
  for (auto _ : state) {
    qdla::apply_pauli_rotation(s, p, 0.1);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dim()));
}
BENCHMARK(BM_PauliRotation)->DenseRange(4, 16, 4);

void BM_RunCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = qdla::build_ansatz(qdla::AnsatzKind::kSA, n, 8);
  const std::vector<double> theta(c.num_params(), 0.3);
  const auto s = qdla::haar_product_state(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::run_circuit(c, theta, s).norm());
  }
}
BENCHMARK(BM_RunCircuit)->Arg(4)->Arg(8)->Arg(12);

void BM_SampleExpectation(benchmark::State& state) {
  const auto s = qdla::haar_product_state(8, 3);
  const auto o = qdla::PauliString::pair(8, 0, 1, 'X');
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::sample_expectation(s, o, 1000, ++seed));
  }
}
BENCHMARK(BM_SampleExpectation);

}  // namespace
