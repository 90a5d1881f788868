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
#include <vector>

#include "qdla/pauli.hpp"

namespace qdla {

/// The Pauli basis of a dynamical Lie algebra: phaseless, duplicate-free and
/// closed under commutators. Elements are kept in discovery order (the input
/// generators first).
struct DlaBasis {
  int n = 0;
  std::vector<PauliString> elements;

  std::size_t dim() const { return elements.size(); }
  bool contains(const PauliString& p) const;
  /// Elements sorted by (x, z) for order-independent comparisons.
  std::vector<PauliString> sorted() const;
};

/// 4^n saturated to the size_t range.
std::size_t default_closure_cap(int n);

/// Lie closure by worklist saturation: every new element is checked against
/// all earlier ones and each anticommuting pair contributes its phaseless
/// product. Throws InvalidInput on identity generators or mixed qubit counts
/// and ResourceError once the basis would grow past `cap` (default 4^n).
DlaBasis lie_closure(std::span<const PauliString> generators,
                     std::optional<std::size_t> cap = std::nullopt);

/// Anticommutation graph over a DLA basis. Edges are evaluated from the
/// symplectic form on demand, so the graph is consistent with commutes() by
/// construction.
class DlaGraph {
 public:
  explicit DlaGraph(DlaBasis basis);

  const DlaBasis& basis() const { return basis_; }
  std::size_t size() const { return basis_.elements.size(); }
  const PauliString& node(std::size_t i) const { return basis_.elements[i]; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && !commutes_unchecked(basis_.elements[i], basis_.elements[j]);
  }
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::size_t edge_count() const;
  /// Dense adjacency; intended for small graphs (tests, JSON output).
  std::vector<std::vector<bool>> adjacency_matrix() const;
  /// Connected components as sorted node-index lists, ordered by smallest
  /// member.
  std::vector<std::vector<std::size_t>> components() const;

 private:
  DlaBasis basis_;
};

DlaGraph build_dla_graph(DlaBasis basis);

/// Whether p and q are joined by a chain of successive anticommutations
/// through basis nodes (or anticommute directly). p and q need not be basis
/// members. Throws InvalidInput when p == q.
bool g_connected(const DlaGraph& graph, const PauliString& p,
                 const PauliString& q);

/// A maximal uniformly (anti)commuting class inside a multi-node component,
/// split by commutation with the observable.
struct DlaClass {
  std::vector<std::size_t> commuting;      ///< nodes with [P, O] = 0
  std::vector<std::size_t> anticommuting;  ///< nodes with {P, O} = 0
  std::size_t size() const { return commuting.size() + anticommuting.size(); }
  std::vector<std::size_t> nodes() const;
};

struct DlaComponent {
  std::vector<std::size_t> nodes;
  std::vector<DlaClass> classes;
};

struct DlaDecomposition {
  std::vector<std::size_t> singletons;  ///< A_1..A_p, one node each
  std::vector<DlaComponent> multi;      ///< B_1..B_q
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> r;  ///< class count per multi-node component
  std::size_t v = 0;           ///< largest class
  std::size_t w = 0;           ///< largest observable-split half-class
};

/// Splits the graph into connected components, partitions every multi-node
/// component into classes of identical commutation signature and splits each
/// class by commutation with `observable`.
DlaDecomposition decompose_dla(const DlaGraph& graph,
                               const PauliString& observable);

std::size_t expressivity(const DlaBasis& basis);

/// Exact non-negative rational, used for efficiencies such as L / min(M_L).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct TradeoffVerdict {
  bool upper_ok = false;  ///< x_exp <= 4^n / f - f
  bool lower_ok = false;  ///< x_exp >= f
  bool saturated = false; ///< upper bound met with equality
  double upper_bound = 0.0;
};

/// Evaluates both trade-off inequalities in exact integer arithmetic.
/// Requires f_eff >= 1 and x_exp >= 1.
TradeoffVerdict tradeoff_verdict(std::int64_t x_exp, Rational f_eff, int n);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

struct AppendixBoundsReport {
  std::size_t p = 0, q = 0, v = 0, w = 0;
  std::vector<std::size_t> r;
  std::size_t x_exp = 0;
  /// Stabilizer set built from the largest class (v >= w + p) or from the
  /// largest half-class plus all singletons.
  std::vector<PauliString> stabilizers;
  bool stabilizers_commute = false;  ///< [S, S] = [S, G_Lie] = 0
  std::vector<BoundCheck> checks;
  bool all_ok() const;
};

/// Evaluates the decomposition-level inequalities (F_eff <= q w when an
/// efficiency is supplied, X_exp <= p + v Σ r_x, the stabilizer-counting
/// bound and its companion, 4^n / |S|^2 >= 4^q; for q = 0 only 2p <= 2^n).
AppendixBoundsReport verify_appendix_bounds(const DlaGraph& graph,
                                            const DlaDecomposition& dec, int n,
                                            std::optional<double> f_eff = std::nullopt);

struct ShortPathReport {
  std::size_t pairs_checked = 0;
  std::size_t max_distance = 0;  ///< over connected pairs
  bool ok = true;                ///< every connected pair at distance <= 2
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Shortest anticommutation-path check over all connected node pairs.
ShortPathReport check_short_paths(const DlaGraph& graph);

}  // namespace qdla
