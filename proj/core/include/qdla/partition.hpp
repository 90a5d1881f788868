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
#include <string>
#include <string_view>
#include <vector>

namespace qdla {

/// Symmetric L x L compatibility relation with a true diagonal.
class CommutationMatrix {
 public:
  CommutationMatrix() = default;
  /// All-true (fully compatible) matrix.
  explicit CommutationMatrix(std::size_t size) : size_(size), data_(size * size, 1) {}

  std::size_t size() const { return size_; }
  bool operator()(std::size_t j, std::size_t k) const { return data_[j * size_ + k] != 0; }
  /// Sets entries (j, k) and (k, j); the diagonal stays true.
  void set(std::size_t j, std::size_t k, bool value);
  /// Number of unordered pairs j < k with entry true.
  std::size_t count_true_off_diagonal() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> data_;
};

enum class PartitionMode { kExact, kGreedy };
std::string to_string(PartitionMode mode);
PartitionMode parse_partition_mode(std::string_view name);

struct MeasurementPartition {
  std::vector<std::vector<std::size_t>> groups;
  PartitionMode mode = PartitionMode::kExact;
  /// False when greedy, or when the exact search hit its node budget.
  bool optimal = false;
  std::size_t num_groups() const { return groups.size(); }
};

/// Partition of 0..L-1 into the fewest mutually compatible groups: a minimum
/// colouring of the incompatibility graph. Exact mode runs DSATUR
/// branch-and-bound with a greedy clique lower bound and needs L <= max_exact
/// (ResourceError otherwise); greedy mode colours vertices largest-degree
/// first.
MeasurementPartition min_measurement_partition(const CommutationMatrix& cm, PartitionMode mode,
                                               std::size_t max_exact = 60,
                                               std::uint64_t node_budget = 20'000'000);

/// Whether every group is a compatible set and the groups cover 0..L-1 once.
bool is_valid_partition(const CommutationMatrix& cm, const MeasurementPartition& partition);

}  // namespace qdla
