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

#include "qdla/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "qdla/error.hpp"

namespace qdla {
namespace {

constexpr int kMaxStabilizerRank = 24;

struct Row {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  bool zero() const { return x == 0 && z == 0; }
  Row& operator^=(const Row& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
};

std::uint64_t qubit_bit(int n, int k) { return std::uint64_t{1} << (n - 1 - k); }

/// Indices of a maximal independent subset of `rows` (GF(2), first-come).
std::vector<std::size_t> independent_subset(const std::vector<Row>& rows) {
  std::vector<Row> basis;
  std::vector<int> pivot_bit;  // bit position in the 128-bit (x|z) word
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Row r = rows[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int pb = pivot_bit[b];
      const bool set = pb >= 64 ? ((r.x >> (pb - 64)) & 1) : ((r.z >> pb) & 1);
      if (set) r ^= basis[b];
    }
    if (r.zero()) continue;
    const int pb = r.x != 0 ? 64 + (63 - std::countl_zero(r.x)) : 63 - std::countl_zero(r.z);
    // Keep the basis reduced on this new pivot.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const bool set = pb >= 64 ? ((basis[b].x >> (pb - 64)) & 1) : ((basis[b].z >> pb) & 1);
      if (set) basis[b] ^= r;
    }
    basis.push_back(r);
    pivot_bit.push_back(pb);
    keep.push_back(i);
  }
  return keep;
}

}  // namespace

bool StabilizerGroup::contains(const PauliString& p) const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const PauliString& e) { return PhaselessEqual{}(e, p); });
}

StabilizerGroup stabilizer_closure(int n, std::span<const PauliString> gens) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("stabilizer qubit count " + std::to_string(n) + " out of range");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].num_qubits() != n) {
      throw DimensionError("stabilizer generator " + gens[i].label() + " does not act on " +
                           std::to_string(n) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes_unchecked(gens[i], gens[j])) {
        throw InvalidInput("stabilizer generators " + gens[j].label() + " and " +
                           gens[i].label() + " anticommute");
      }
    }
  }
  std::vector<Row> rows;
  for (const auto& g : gens) rows.push_back({g.x_bits(), g.z_bits()});
  StabilizerGroup group;
  group.n = n;
  for (std::size_t i : independent_subset(rows)) {
    group.generators.push_back(gens[i].phaseless());
  }
  group.s = static_cast<int>(group.generators.size());
  if (group.s > kMaxStabilizerRank) {
    throw ResourceError("stabilizer rank " + std::to_string(group.s) + " exceeds " +
                        std::to_string(kMaxStabilizerRank));
  }
  const std::uint64_t order = std::uint64_t{1} << group.s;
  group.elements.reserve(order);
  for (std::uint64_t mask = 0; mask < order; ++mask) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (int b = 0; b < group.s; ++b) {
      if ((mask >> b) & 1) {
        x ^= group.generators[static_cast<std::size_t>(b)].x_bits();
        z ^= group.generators[static_cast<std::size_t>(b)].z_bits();
      }
    }
    group.elements.push_back(PauliString::from_bits(n, x, z));
  }
  return group;
}

std::uint64_t centralizer_dim(const StabilizerGroup& group) {
  if (2 * group.n >= 64) {
    throw ResourceError("centralizer dimension overflows 64 bits");
  }
  return (std::uint64_t{1} << (2 * group.n)) >> group.s;
}

LogicalBasis logical_basis(const StabilizerGroup& group) {
  const int n = group.n;
  const auto bit = [n](int k) { return qubit_bit(n, k); };
  std::vector<Row> rows;
  for (const auto& g : group.generators) rows.push_back({g.x_bits(), g.z_bits()});
  const std::size_t s = rows.size();

  // Reduced row echelon form of the X half; pivot qubits in px.
  std::vector<int> px;
  std::size_t r = 0;
  for (int c = 0; c < n && r < s; ++c) {
    std::size_t piv = r;
    while (piv < s && (rows[piv].x & bit(c)) == 0) ++piv;
    if (piv == s) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < s; ++i) {
      if (i != r && (rows[i].x & bit(c))) rows[i] ^= rows[r];
    }
    px.push_back(c);
    ++r;
  }
  // Rows r.. are pure Z; reduce them on the qubits that are not X pivots.
  std::vector<bool> is_px(static_cast<std::size_t>(n), false);
  for (int c : px) is_px[static_cast<std::size_t>(c)] = true;
  std::vector<int> pz;
  std::size_t rz = r;
  for (int c = 0; c < n && rz < s; ++c) {
    if (is_px[static_cast<std::size_t>(c)]) continue;
    std::size_t piv = rz;
    while (piv < s && (rows[piv].z & bit(c)) == 0) ++piv;
    if (piv == s) continue;
    std::swap(rows[piv], rows[rz]);
    // Clearing the column in the X rows as well sets the C1 block to zero.
    for (std::size_t i = 0; i < s; ++i) {
      if (i != rz && (rows[i].z & bit(c))) rows[i] ^= rows[rz];
    }
    pz.push_back(c);
    ++rz;
  }
  if (rz != s) {
    throw InvalidInput("stabilizer generators are not independent");
  }
  std::vector<bool> is_pz(static_cast<std::size_t>(n), false);
  for (int c : pz) is_pz[static_cast<std::size_t>(c)] = true;
  std::vector<int> free;
  for (int c = 0; c < n; ++c) {
    if (!is_px[static_cast<std::size_t>(c)] && !is_pz[static_cast<std::size_t>(c)]) {
      free.push_back(c);
    }
  }

  // Standard form [I A1 A2 | B 0 C ; 0 0 0 | D I E] in column order
  // (px, pz, free). Logical X̄_i = [0 E^T e_i | C^T 0 0], Z̄_i = [0 0 0 | A2^T 0 e_i].
  LogicalBasis basis;
  for (std::size_t i = 0; i < free.size(); ++i) {
    const std::uint64_t fi = bit(free[i]);
    std::uint64_t lx = fi;
    std::uint64_t lz = 0;
    for (std::size_t j = 0; j < pz.size(); ++j) {
      if (rows[r + j].z & fi) lx |= bit(pz[j]);  // E[j][i]
    }
    for (std::size_t t = 0; t < px.size(); ++t) {
      if (rows[t].z & fi) lz |= bit(px[t]);  // C[t][i]
    }
    basis.x.push_back(PauliString::from_bits(n, lx, lz));

    std::uint64_t zz = fi;
    for (std::size_t t = 0; t < px.size(); ++t) {
      if (rows[t].x & fi) zz |= bit(px[t]);  // A2[t][i]
    }
    basis.z.push_back(PauliString::from_bits(n, 0, zz));
  }
  return basis;
}

std::vector<PauliString> logical_operators(const StabilizerGroup& group) {
  const LogicalBasis basis = logical_basis(group);
  const std::size_t k = basis.k();
  if (2 * k >= 40) {
    throw ResourceError("4^k logical operators for k = " + std::to_string(k) +
                        " is too many to enumerate");
  }
  std::vector<PauliString> out;
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  out.reserve(count - 1);
  for (std::uint64_t m = 1; m < count; ++m) {
    auto p = PauliString::identity(group.n);
    for (std::size_t i = 0; i < k; ++i) {
      const auto digit = (m >> (2 * i)) & 3;
      if (digit & 1) p = p * basis.x[i];
      if (digit & 2) p = p * basis.z[i];
    }
    out.push_back(p.phaseless());
  }
  return out;
}

LogicalSchedule parse_logical_schedule(std::string_view name) {
  if (name == "in-order" || name == "given") return LogicalSchedule::kInOrder;
  if (name == "weight") return LogicalSchedule::kWeightAscending;
  throw InvalidInput("unknown logical schedule \"" + std::string(name) +
                     "\" (expected in-order or weight)");
}

Circuit build_slpa(const StabilizerGroup& group, std::span<const PauliString> logicals,
                   int layers, LogicalSchedule schedule,
                   std::optional<std::size_t> gates_per_block) {
  if (layers < 1) throw InvalidInput("SLPA needs at least one layer");
  if (logicals.empty()) throw InvalidInput("SLPA needs at least one logical operator");
  const std::size_t per_block = gates_per_block.value_or(group.order());
  if (per_block < 1 || per_block > group.order()) {
    throw InvalidInput("gates per block must lie in [1, |S|] = [1, " +
                       std::to_string(group.order()) + "]");
  }
  std::vector<PauliString> order(logicals.begin(), logicals.end());
  for (const auto& l : order) {
    if (l.num_qubits() != group.n) {
      throw DimensionError("logical " + l.label() + " does not act on " +
                           std::to_string(group.n) + " qubits");
    }
    for (const auto& g : group.generators) {
      if (!commutes_unchecked(l, g)) {
        throw InvalidInput("logical " + l.label() + " anticommutes with stabilizer " +
                           g.label());
      }
    }
  }
  if (schedule == LogicalSchedule::kWeightAscending) {
    std::stable_sort(order.begin(), order.end(), [](const PauliString& a, const PauliString& b) {
      return a.weight() < b.weight();
    });
  }
  Circuit circuit(group.n, AnsatzKind::kSLPA);
  std::vector<PauliString> block;
  for (int layer = 0; layer < layers; ++layer) {
    for (const auto& l : order) {
      block.clear();
      for (std::size_t j = 0; j < per_block; ++j) {
        block.push_back((group.elements[j] * l).phaseless());
      }
      circuit.add_block(block);
    }
  }
  return circuit;
}

CbcReport cbc_validate(const Circuit& circuit, std::size_t max_listed) {
  if (!circuit.has_blocks()) {
    throw InvalidInput("circuit has no block structure");
  }
  CbcReport rep;
  auto flag = [&](std::size_t a, std::size_t b, std::string why) {
    rep.valid = false;
    ++rep.violation_count;
    if (rep.violations.size() < max_listed) rep.violations.push_back({a, b, std::move(why)});
  };
  const auto& gates = circuit.gates();
  const auto& blocks = circuit.blocks();
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t i = blocks[a].begin; i < blocks[a].end; ++i) {
      for (std::size_t j = i + 1; j < blocks[a].end; ++j) {
        if (!commutes_unchecked(gates[i].generator, gates[j].generator)) {
          flag(i, j, "anticommuting generators in block " + std::to_string(a));
        }
      }
    }
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      const bool ref = commutes_unchecked(gates[blocks[a].begin].generator,
                                          gates[blocks[b].begin].generator);
      for (std::size_t i = blocks[a].begin; i < blocks[a].end; ++i) {
        for (std::size_t j = blocks[b].begin; j < blocks[b].end; ++j) {
          if (commutes_unchecked(gates[i].generator, gates[j].generator) != ref) {
            flag(i, j, "mixed commutation between blocks " + std::to_string(a) + " and " +
                           std::to_string(b));
          }
        }
      }
    }
  }
  return rep;
}

StabilizerForm cbc_to_stabilizer_form(const Circuit& circuit) {
  const CbcReport rep = cbc_validate(circuit, 1);
  if (!rep.valid) {
    throw InvalidInput("not a commuting block circuit: gates " +
                       std::to_string(rep.violations.front().gate_a) + " and " +
                       std::to_string(rep.violations.front().gate_b) + ", " +
                       rep.violations.front().reason);
  }
  std::vector<PauliString> products;
  StabilizerForm form;
  for (const auto& block : circuit.blocks()) {
    const PauliString& first = circuit.gate(block.begin).generator;
    form.logicals.push_back(first);
    for (std::size_t j = block.begin + 1; j < block.end; ++j) {
      const auto s = (first * circuit.gate(j).generator).phaseless();
      if (!s.is_identity()) products.push_back(s);
    }
  }
  form.group = stabilizer_closure(circuit.num_qubits(), products);
  return form;
}

bool check_circuit_symmetry(const Circuit& circuit, const StabilizerGroup& group) {
  for (const auto& gate : circuit.gates()) {
    for (const auto& s : group.elements) {
      if (!commutes(gate.generator, s)) return false;
    }
  }
  return true;
}

std::string to_string(GradientMethod method) {
  return method == GradientMethod::kParameterShift ? "parameter-shift" : "lcu";
}

GradientMethod parse_gradient_method(std::string_view name) {
  if (name == "parameter-shift" || name == "ps") return GradientMethod::kParameterShift;
  if (name == "lcu" || name == "lcu-blocks") return GradientMethod::kLcuBlocks;
  throw InvalidInput("unknown gradient method \"" + std::string(name) +
                     "\" (expected parameter-shift or lcu)");
}

std::size_t measurement_budget(const Circuit& circuit, GradientMethod method,
                               const PauliString& observable) {
  if (method == GradientMethod::kParameterShift) return 2 * circuit.num_params();
  if (!circuit.has_blocks()) {
    throw InvalidInput("LCU block budget needs a circuit with block structure");
  }
  std::size_t total = 0;
  const auto& blocks = circuit.blocks();
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    bool any_commuting = false;
    bool any_anticommuting = false;
    for (std::size_t j = blocks[a].begin; j < blocks[a].end; ++j) {
      if (commutes(circuit.gate(j).generator, observable)) {
        any_commuting = true;
      } else {
        any_anticommuting = true;
      }
    }
    const bool final_block = a + 1 == blocks.size();
    total += (any_commuting && !final_block ? 1 : 0) + (any_anticommuting ? 1 : 0);
  }
  return total;
}

}  // namespace qdla
