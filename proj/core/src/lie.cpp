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

#include "qdla/lie.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <unordered_set>
#include <utility>

#include "qdla/error.hpp"

namespace qdla {
namespace {

using PauliSet = std::unordered_set<PauliString, PhaselessHash, PhaselessEqual>;

constexpr std::size_t kMaxShortPathNodes = 16384;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

__int128 pow4(int n) { return static_cast<__int128>(1) << (2 * n); }

}  // namespace

bool DlaBasis::contains(const PauliString& p) const {
  const auto bare = p.phaseless();
  return std::any_of(elements.begin(), elements.end(), [&](const PauliString& e) {
    return PhaselessEqual{}(e, bare);
  });
}

std::vector<PauliString> DlaBasis::sorted() const {
  auto out = elements;
  std::sort(out.begin(), out.end(), phaseless_less);
  return out;
}

std::size_t default_closure_cap(int n) {
  if (2 * n >= std::numeric_limits<std::size_t>::digits) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{1} << (2 * n);
}

DlaBasis lie_closure(std::span<const PauliString> generators,
                     std::optional<std::size_t> cap) {
  if (generators.empty()) {
    throw InvalidInput("Lie closure needs at least one generator");
  }
  const int n = generators.front().num_qubits();
  const std::size_t limit = cap.value_or(default_closure_cap(n));

  DlaBasis basis;
  basis.n = n;
  PauliSet seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.num_qubits() != n) {
      throw DimensionError("generator " + std::to_string(i) + " acts on " +
                           std::to_string(g.num_qubits()) + " qubits, expected " +
                           std::to_string(n));
    }
    if (g.is_identity()) {
      throw InvalidInput("generator " + std::to_string(i) + " is the identity");
    }
    if (seen.insert(g.phaseless()).second) {
      basis.elements.push_back(g.phaseless());
    }
  }
  if (basis.elements.size() > limit) {
    throw ResourceError("Lie closure exceeds the cap of " + std::to_string(limit) +
                        " elements");
  }

  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const PauliString& a = basis.elements[i];
      const PauliString& b = basis.elements[j];
      if (commutes_unchecked(a, b)) continue;
      auto prod = PauliString::from_bits(n, a.x_bits() ^ b.x_bits(),
                                         a.z_bits() ^ b.z_bits());
      if (seen.insert(prod).second) {
        if (basis.elements.size() + 1 > limit) {
          throw ResourceError("Lie closure exceeds the cap of " +
                              std::to_string(limit) + " elements");
        }
        basis.elements.push_back(prod);
      }
    }
  }
  return basis;
}

DlaGraph::DlaGraph(DlaBasis basis) : basis_(std::move(basis)) {}

std::vector<std::size_t> DlaGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::size_t DlaGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacent(i, j)) ++count;
    }
  }
  return count;
}

std::vector<std::vector<bool>> DlaGraph::adjacency_matrix() const {
  std::vector<std::vector<bool>> m(size(), std::vector<bool>(size(), false));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) m[i][j] = adjacent(i, j);
  }
  return m;
}

std::vector<std::vector<std::size_t>> DlaGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> unvisited(size());
  for (std::size_t i = 0; i < size(); ++i) unvisited[i] = size() - 1 - i;
  while (!unvisited.empty()) {
    std::vector<std::size_t> comp{unvisited.back()};
    unvisited.pop_back();
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const std::size_t u = comp[head];
      std::size_t keep = 0;
      for (std::size_t k = 0; k < unvisited.size(); ++k) {
        const std::size_t cand = unvisited[k];
        if (adjacent(u, cand)) {
          comp.push_back(cand);
        } else {
          unvisited[keep++] = cand;
        }
      }
      unvisited.resize(keep);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

DlaGraph build_dla_graph(DlaBasis basis) { return DlaGraph(std::move(basis)); }

bool g_connected(const DlaGraph& graph, const PauliString& p,
                 const PauliString& q) {
  if (PhaselessEqual{}(p, q)) {
    throw InvalidInput("g-connectivity is defined for distinct operators, got " +
                       p.label() + " twice");
  }
  if (!commutes(p, q)) return true;
  if (p.num_qubits() != graph.basis().n && graph.size() > 0) {
    throw DimensionError("operator and DLA graph act on different qubit counts");
  }
  // Breadth-first search over basis nodes, seeded with the neighbours of p.
  std::vector<bool> visited(graph.size(), false);
  std::deque<std::size_t> frontier;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!commutes_unchecked(p, graph.node(i))) {
      visited[i] = true;
      frontier.push_back(i);
    }
  }
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop_front();
    if (!commutes_unchecked(graph.node(u), q)) return true;
    for (std::size_t j = 0; j < graph.size(); ++j) {
      if (!visited[j] && graph.adjacent(u, j)) {
        visited[j] = true;
        frontier.push_back(j);
      }
    }
  }
  return false;
}

std::vector<std::size_t> DlaClass::nodes() const {
  std::vector<std::size_t> out = commuting;
  out.insert(out.end(), anticommuting.begin(), anticommuting.end());
  std::sort(out.begin(), out.end());
  return out;
}

DlaDecomposition decompose_dla(const DlaGraph& graph,
                               const PauliString& observable) {
  if (graph.size() > 0 && observable.num_qubits() != graph.basis().n) {
    throw DimensionError("observable and DLA graph act on different qubit counts");
  }
  DlaDecomposition dec;
  std::mt19937_64 keygen(0x5EEDC1A55ull);
  std::vector<std::uint64_t> key_a(graph.size());
  std::vector<std::uint64_t> key_b(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    key_a[i] = keygen();
    key_b[i] = keygen();
  }

  for (auto& comp : graph.components()) {
    if (comp.size() == 1) {
      dec.singletons.push_back(comp.front());
      continue;
    }
    // Commutation signature of a node = its anticommuting set inside the
    // component, hashed as an XOR of per-node random keys; equal hashes are
    // confirmed node by node below.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>> buckets;
    for (std::size_t u : comp) {
      std::uint64_t ha = 0;
      std::uint64_t hb = 0;
      for (std::size_t t : comp) {
        if (graph.adjacent(u, t)) {
          ha ^= key_a[t];
          hb ^= key_b[t];
        }
      }
      buckets[{ha, hb}].push_back(u);
    }
    auto same_signature = [&](std::size_t a, std::size_t b) {
      for (std::size_t t : comp) {
        if (graph.adjacent(a, t) != graph.adjacent(b, t)) return false;
      }
      return true;
    };

    DlaComponent component;
    component.nodes = comp;
    for (auto& [key, members] : buckets) {
      std::vector<bool> taken(members.size(), false);
      for (std::size_t a = 0; a < members.size(); ++a) {
        if (taken[a]) continue;
        DlaClass cls;
        for (std::size_t b = a; b < members.size(); ++b) {
          if (taken[b]) continue;
          if (b != a && !same_signature(members[a], members[b])) continue;
          taken[b] = true;
          const std::size_t node = members[b];
          if (commutes_unchecked(graph.node(node), observable)) {
            cls.commuting.push_back(node);
          } else {
            cls.anticommuting.push_back(node);
          }
        }
        component.classes.push_back(std::move(cls));
      }
    }
    std::sort(component.classes.begin(), component.classes.end(),
              [](const DlaClass& a, const DlaClass& b) {
                return a.nodes().front() < b.nodes().front();
              });
    dec.r.push_back(component.classes.size());
    for (const auto& cls : component.classes) {
      dec.v = std::max(dec.v, cls.size());
      dec.w = std::max({dec.w, cls.commuting.size(), cls.anticommuting.size()});
    }
    dec.multi.push_back(std::move(component));
  }
  dec.p = dec.singletons.size();
  dec.q = dec.multi.size();
  return dec;
}

std::size_t expressivity(const DlaBasis& basis) { return basis.dim(); }

TradeoffVerdict tradeoff_verdict(std::int64_t x_exp, Rational f_eff, int n) {
  if (f_eff.den <= 0 || f_eff.num < f_eff.den) {
    throw InvalidInput("gradient measurement efficiency must be >= 1");
  }
  if (x_exp < 1) {
    throw InvalidInput("expressivity must be >= 1");
  }
  if (n < 0 || n > 30) {
    throw InvalidInput("trade-off verdict supports 0 <= n <= 30");
  }
  const __int128 p = f_eff.num;
  const __int128 q = f_eff.den;
  const __int128 x = x_exp;
  // x <= 4^n / f - f  <=>  x p q <= 4^n q^2 - p^2 for f = p / q > 0.
  const __int128 lhs = x * p * q;
  const __int128 rhs = pow4(n) * q * q - p * p;
  TradeoffVerdict v;
  v.upper_ok = lhs <= rhs;
  v.saturated = lhs == rhs;
  v.lower_ok = x * q >= p;
  v.upper_bound = static_cast<double>(pow4(n)) / f_eff.value() - f_eff.value();
  return v;
}

bool AppendixBoundsReport::all_ok() const {
  return stabilizers_commute &&
         std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.ok; });
}

AppendixBoundsReport verify_appendix_bounds(const DlaGraph& graph,
                                            const DlaDecomposition& dec, int n,
                                            std::optional<double> f_eff) {
  AppendixBoundsReport rep;
  rep.p = dec.p;
  rep.q = dec.q;
  rep.v = dec.v;
  rep.w = dec.w;
  rep.r = dec.r;
  rep.x_exp = graph.size();
  const double four_n = static_cast<double>(pow4(n));
  const double p = static_cast<double>(dec.p);

  if (dec.q == 0) {
    for (std::size_t a : dec.singletons) rep.stabilizers.push_back(graph.node(a));
    rep.checks.push_back({"2p <= 2^n", 2.0 * p, std::ldexp(1.0, n),
                          2.0 * p <= std::ldexp(1.0, n)});
    if (f_eff) {
      rep.checks.push_back({"F_eff = X_exp = p", *f_eff, p, *f_eff <= p});
    }
  } else {
    const double q = static_cast<double>(dec.q);
    const double v = static_cast<double>(dec.v);
    const double w = static_cast<double>(dec.w);
    double sum_r = 0.0;
    for (std::size_t r : dec.r) sum_r += static_cast<double>(r);

    // Largest class (C_v) and largest half-class (C_w), first in component
    // order on ties.
    const DlaClass* cv = nullptr;
    const std::vector<std::size_t>* cw = nullptr;
    for (const auto& comp : dec.multi) {
      for (const auto& cls : comp.classes) {
        if (cv == nullptr || cls.size() > cv->size()) cv = &cls;
        for (const auto* half : {&cls.commuting, &cls.anticommuting}) {
          if (cw == nullptr || half->size() > cw->size()) cw = half;
        }
      }
    }
    if (dec.v >= dec.w + dec.p) {
      const auto nodes = cv->nodes();
      const PauliString& e1 = graph.node(nodes.front());
      for (std::size_t e : nodes) {
        rep.stabilizers.push_back((e1 * graph.node(e)).phaseless());
      }
    } else {
      const PauliString& f1 = graph.node(cw->front());
      for (std::size_t f : *cw) {
        rep.stabilizers.push_back((f1 * graph.node(f)).phaseless());
      }
      for (std::size_t a : dec.singletons) rep.stabilizers.push_back(graph.node(a));
    }
    const double s = static_cast<double>(rep.stabilizers.size());

    if (f_eff) {
      rep.checks.push_back({"F_eff <= q w", *f_eff, q * w, *f_eff <= q * w + 1e-12});
    }
    const double x = static_cast<double>(rep.x_exp);
    rep.checks.push_back({"X_exp <= p + v sum(r)", x, p + v * sum_r, x <= p + v * sum_r});
    const double counting = four_n * v / (std::pow(4.0, q - 1.0) * s * s) +
                            (3.0 * q - 4.0) * v + p;
    rep.checks.push_back({"X_exp <= 4^n v / (4^(q-1) |S|^2) + (3q-4) v + p", x,
                          counting, x <= counting + 1e-9});
    const double rhs = four_n / (q * w) - q * w;
    rep.checks.push_back({"4^n v / (4^(q-1) |S|^2) + (3q-4) v + p <= 4^n/(q w) - q w",
                          counting, rhs, counting <= rhs + 1e-9});
    rep.checks.push_back({"4^n / |S|^2 >= 4^q", four_n / (s * s), std::pow(4.0, q),
                          four_n / (s * s) >= std::pow(4.0, q) - 1e-9});
  }

  rep.stabilizers_commute = true;
  for (std::size_t i = 0; i < rep.stabilizers.size() && rep.stabilizers_commute; ++i) {
    for (std::size_t j = 0; j < rep.stabilizers.size(); ++j) {
      if (!commutes_unchecked(rep.stabilizers[i], rep.stabilizers[j])) {
        rep.stabilizers_commute = false;
        break;
      }
    }
    for (std::size_t k = 0; k < graph.size() && rep.stabilizers_commute; ++k) {
      if (!commutes_unchecked(rep.stabilizers[i], graph.node(k))) {
        rep.stabilizers_commute = false;
      }
    }
  }
  return rep;
}

ShortPathReport check_short_paths(const DlaGraph& graph) {
  const std::size_t d = graph.size();
  if (d > kMaxShortPathNodes) {
    throw ResourceError("short-path check limited to " +
                        std::to_string(kMaxShortPathNodes) + " nodes");
  }
  const std::size_t words = words_for(d);
  std::vector<std::uint64_t> rows(d * words, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (graph.adjacent(i, j)) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  std::vector<std::size_t> comp_of(d, 0);
  const auto comps = graph.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t u : comps[c]) comp_of[u] = c;
  }

  ShortPathReport rep;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (comp_of[i] != comp_of[j]) continue;
      ++rep.pairs_checked;
      if (graph.adjacent(i, j)) {
        rep.max_distance = std::max<std::size_t>(rep.max_distance, 1);
        continue;
      }
      bool common = false;
      for (std::size_t k = 0; k < words && !common; ++k) {
        common = (rows[i * words + k] & rows[j * words + k]) != 0;
      }
      if (common) {
        rep.max_distance = std::max<std::size_t>(rep.max_distance, 2);
        continue;
      }
      rep.ok = false;
      rep.max_distance = std::max<std::size_t>(rep.max_distance, 3);
      if (!rep.violation) rep.violation = std::make_pair(i, j);
    }
  }
  return rep;
}

}  // namespace qdla
