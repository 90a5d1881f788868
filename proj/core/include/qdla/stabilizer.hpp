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
#include <string>
#include <string_view>
#include <vector>

#include "qdla/circuit.hpp"
#include "qdla/pauli.hpp"

namespace qdla {

/// A phaseless stabilizer group: commuting, product-closed, identity first.
struct StabilizerGroup {
  int n = 0;
  std::vector<PauliString> generators;  ///< independent, s of them
  std::vector<PauliString> elements;    ///< all 2^s products
  int s = 0;

  bool contains(const PauliString& p) const;
  std::size_t order() const { return elements.size(); }
};

/// Product closure of pairwise-commuting generators; s is the GF(2) rank of
/// the stacked (x|z) check matrix. Throws InvalidInput naming the first
/// anticommuting pair.
StabilizerGroup stabilizer_closure(int n, std::span<const PauliString> gens);

/// Size of the Pauli centralizer of S: 4^n / 2^s.
std::uint64_t centralizer_dim(const StabilizerGroup& group);

/// k = n - s logical X/Z pairs read off the standard form of the check
/// matrix: X̄_i anticommutes with Z̄_j iff i == j, and all of them commute
/// with S.
struct LogicalBasis {
  std::vector<PauliString> x;
  std::vector<PauliString> z;
  std::size_t k() const { return x.size(); }
};
LogicalBasis logical_basis(const StabilizerGroup& group);

/// All 4^k - 1 non-identity logical Pauli operators, pairwise inequivalent
/// modulo S, enumerated as products of the standard-form basis.
std::vector<PauliString> logical_operators(const StabilizerGroup& group);

enum class LogicalSchedule {
  kInOrder,          ///< logicals in the order given
  kWeightAscending,  ///< stable sort by Pauli weight
};
LogicalSchedule parse_logical_schedule(std::string_view name);

/// Stabilizer-logical product circuit: for each layer and each logical L_a
/// (per `schedule`), one block with generators {S_j L_a : S_j in S}. A block
/// uses the first `gates_per_block` group elements when given (default 2^s).
Circuit build_slpa(const StabilizerGroup& group,
                   std::span<const PauliString> logicals, int layers,
                   LogicalSchedule schedule = LogicalSchedule::kInOrder,
                   std::optional<std::size_t> gates_per_block = std::nullopt);

struct CbcViolation {
  std::size_t gate_a = 0;
  std::size_t gate_b = 0;
  std::string reason;
};

struct CbcReport {
  bool valid = true;
  std::size_t violation_count = 0;
  std::vector<CbcViolation> violations;  ///< first few, for diagnostics
};

/// Checks that generators within a block commute and that every pair of
/// blocks is uniformly commuting or uniformly anticommuting.
CbcReport cbc_validate(const Circuit& circuit, std::size_t max_listed = 32);

struct StabilizerForm {
  StabilizerGroup group;
  std::vector<PauliString> logicals;  ///< first generator of every block
};

/// Recovers S = ⟨G_1^a G_j^a⟩ and L = {G_1^a} from a valid commuting block
/// circuit. Throws InvalidInput when the circuit is not a valid CBC.
StabilizerForm cbc_to_stabilizer_form(const Circuit& circuit);

/// True iff every gate generator commutes with every element of S.
bool check_circuit_symmetry(const Circuit& circuit, const StabilizerGroup& group);

enum class GradientMethod { kParameterShift, kLcuBlocks };
std::string to_string(GradientMethod method);
GradientMethod parse_gradient_method(std::string_view name);

/// Distinct circuits per full-gradient evaluation: 2L for the parameter
/// shift; one circuit per commutation sign with O present in each block for
/// the block LCU method, minus the commuting part of the final block.
std::size_t measurement_budget(const Circuit& circuit, GradientMethod method,
                               const PauliString& observable);

}  // namespace qdla
