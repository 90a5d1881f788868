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

#include "qdla/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qdla/error.hpp"

namespace qdla {

void CommutationMatrix::set(std::size_t j, std::size_t k, bool value) {
  if (j == k) return;
  data_[j * size_ + k] = value ? 1 : 0;
  data_[k * size_ + j] = value ? 1 : 0;
}

std::size_t CommutationMatrix::count_true_off_diagonal() const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < size_; ++j) {
    for (std::size_t k = j + 1; k < size_; ++k) count += (*this)(j, k) ? 1 : 0;
  }
  return count;
}

std::string to_string(PartitionMode mode) {
  return mode == PartitionMode::kExact ? "exact" : "greedy";
}

PartitionMode parse_partition_mode(std::string_view name) {
  if (name == "exact") return PartitionMode::kExact;
  if (name == "greedy") return PartitionMode::kGreedy;
  throw InvalidInput("unknown partition mode \"" + std::string(name) +
                     "\" (expected exact or greedy)");
}

namespace {

std::vector<std::vector<std::size_t>> groups_from_colors(const std::vector<int>& color, int k) {
  std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < color.size(); ++v) {
    groups[static_cast<std::size_t>(color[v])].push_back(v);
  }
  return groups;
}

std::vector<int> greedy_colors(const CommutationMatrix& cm, int& num_colors) {
  const std::size_t n = cm.size();
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) degree[v] += cm(v, u) ? 0 : 1;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  std::vector<int> color(n, -1);
  num_colors = 0;
  std::vector<char> used;
  for (std::size_t v : order) {
    used.assign(static_cast<std::size_t>(num_colors) + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
      if (color[u] >= 0 && !cm(v, u)) used[static_cast<std::size_t>(color[u])] = 1;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
    num_colors = std::max(num_colors, c + 1);
  }
  return color;
}

class Dsatur {
 public:
  Dsatur(std::vector<std::uint64_t> adj, int upper, std::vector<int> best, int lower,
         std::uint64_t budget)
      : adj_(std::move(adj)), best_k_(upper), best_(std::move(best)), lower_(lower),
        budget_(budget), color_(adj_.size(), -1) {}

  void run() {
    const std::uint64_t all = adj_.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << adj_.size()) - 1;
    recurse(all, 0);
  }
  int best_k() const { return best_k_; }
  const std::vector<int>& best() const { return best_; }
  bool complete() const { return !aborted_; }

 private:
  void recurse(std::uint64_t uncolored, int k) {
    if (best_k_ == lower_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (uncolored == 0) {
      if (k < best_k_) {
        best_k_ = k;
        best_ = color_;
      }
      return;
    }
    if (k >= best_k_) return;
    // Most saturated uncolored vertex, ties broken by uncolored degree.
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (std::uint64_t m = uncolored; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      int sat = 0;
      for (int c = 0; c < k; ++c) sat += (adj_[static_cast<std::size_t>(v)] & class_[static_cast<std::size_t>(c)]) ? 1 : 0;
      const int deg = std::popcount(adj_[static_cast<std::size_t>(v)] & uncolored);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const auto v = static_cast<std::size_t>(pick);
    const std::uint64_t bit = std::uint64_t{1} << pick;
    for (int c = 0; c < k; ++c) {
      if (adj_[v] & class_[static_cast<std::size_t>(c)]) continue;
      class_[static_cast<std::size_t>(c)] |= bit;
      color_[v] = c;
      recurse(uncolored & ~bit, k);
      class_[static_cast<std::size_t>(c)] &= ~bit;
      if (best_k_ == lower_ || aborted_) return;
    }
    if (k + 1 < best_k_) {
      if (class_.size() <= static_cast<std::size_t>(k)) class_.resize(static_cast<std::size_t>(k) + 1, 0);
      class_[static_cast<std::size_t>(k)] = bit;
      color_[v] = k;
      recurse(uncolored & ~bit, k + 1);
      class_[static_cast<std::size_t>(k)] = 0;
    }
    color_[v] = -1;
  }

  std::vector<std::uint64_t> adj_;
  int best_k_;
  std::vector<int> best_;
  int lower_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> color_;
  std::vector<std::uint64_t> class_ = std::vector<std::uint64_t>(64, 0);
};

int greedy_clique_bound(const std::vector<std::uint64_t>& adj) {
  int best = adj.empty() ? 0 : 1;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    std::uint64_t cand = adj[s];
    int size = 1;
    while (cand) {
      // Take the candidate with the most neighbours among the candidates.
      int pick = -1;
      int pick_deg = -1;
      for (std::uint64_t m = cand; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int d = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      ++size;
      cand &= adj[static_cast<std::size_t>(pick)];
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

MeasurementPartition min_measurement_partition(const CommutationMatrix& cm, PartitionMode mode,
                                               std::size_t max_exact,
                                               std::uint64_t node_budget) {
  const std::size_t n = cm.size();
  MeasurementPartition out;
  out.mode = mode;
  int k = 0;
  std::vector<int> color = greedy_colors(cm, k);
  if (mode == PartitionMode::kGreedy || n == 0) {
    out.groups = groups_from_colors(color, k);
    out.optimal = n == 0;
    return out;
  }
  if (n > std::min<std::size_t>(max_exact, 64)) {
    throw ResourceError("exact partition of " + std::to_string(n) + " parameters exceeds the cap of " +
                        std::to_string(std::min<std::size_t>(max_exact, 64)) + "; use greedy mode");
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && !cm(v, u)) adj[v] |= std::uint64_t{1} << u;
    }
  }
  const int lower = greedy_clique_bound(adj);
  Dsatur search(adj, k, color, lower, node_budget);
  if (lower < k) search.run();
  out.groups = groups_from_colors(search.best(), search.best_k());
  out.optimal = search.complete();
  return out;
}

bool is_valid_partition(const CommutationMatrix& cm, const MeasurementPartition& partition) {
  std::vector<int> seen(cm.size(), 0);
  for (const auto& g : partition.groups) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (g[a] >= cm.size()) return false;
      ++seen[g[a]];
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        if (!cm(g[a], g[b])) return false;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

}  // namespace qdla
