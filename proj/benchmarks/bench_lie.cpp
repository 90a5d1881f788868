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
#include "qdla/lie.hpp"

namespace {

void BM_LieClosureSA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = qdla::sa_layer(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::lie_closure(gens).dim());
  }
}
BENCHMARK(BM_LieClosureSA)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LieClosureNSA(benchmark::State& state) {
  const auto gens = qdla::build_ansatz(qdla::AnsatzKind::kNSA, 4, 1).generators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::lie_closure(gens).dim());
  }
}
BENCHMARK(BM_LieClosureNSA)->Unit(benchmark::kMillisecond);

void BM_DecomposeDla(benchmark::State& state) {
  const qdla::DlaGraph graph(qdla::lie_closure(qdla::sa_layer(6)));
  const auto o = qdla::default_observable(qdla::AnsatzKind::kSA, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdla::decompose_dla(graph, o).v);
  }
}
BENCHMARK(BM_DecomposeDla)->Unit(benchmark::kMillisecond);

}  // namespace
