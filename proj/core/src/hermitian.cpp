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

#include "qdla/hermitian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qdla/error.hpp"

namespace qdla {

HermitianOperator::HermitianOperator(Eigen::MatrixXcd matrix, double tolerance)
    : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols()) {
    throw InvalidInput("Hermitian operator must be square, got " + std::to_string(m_.rows()) +
                       "x" + std::to_string(m_.cols()));
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tolerance * scale) {
    throw InvalidInput("matrix is not Hermitian (max |A - A^†| = " + std::to_string(dev) + ")");
  }
}

HermitianOperator xxz_hamiltonian(int n, double j_inter, double delta) {
  if (n < 2 || n > 10 || n % 2 != 0) {
    throw InvalidInput("XXZ chain needs an even qubit count in [2, 10], got " +
                       std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const auto add_bond = [&](int a, int b, double strength) {
    const double weights[3] = {1.0, 1.0, delta};
    const char ops[3] = {'X', 'Y', 'Z'};
    for (int t = 0; t < 3; ++t) {
      Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
      apply_pauli(term, PauliString::pair(n, a, b, ops[t]));
      h += (strength * weights[t]) * term;
    }
  };
  for (int a = 0; a + 1 < n; a += 2) add_bond(a, a + 1, 1.0);
  for (int a = 1; a + 1 < n; a += 2) add_bond(a, a + 1, j_inter);
  return HermitianOperator(std::move(h));
}

Eigensystem jacobi_eigensystem(const Eigen::MatrixXcd& input, double tolerance, int max_sweeps) {
  Eigen::MatrixXcd a = input;
  const Eigen::Index dim = a.rows();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double target = tolerance * std::max(1.0, a.norm());
  const auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index q = 0; q < dim; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) s += 2.0 * std::norm(a(p, q));
    }
    return std::sqrt(s);
  };
  Eigensystem out;
  while (off_norm() > target) {
    if (out.sweeps == max_sweeps) {
      throw ResourceError("Jacobi eigensolver did not converge in " +
                          std::to_string(max_sweeps) + " sweeps");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p < dim; ++p) {
      for (Eigen::Index q = p + 1; q < dim; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag < 1e-300) continue;
        // Phase q so the pair is real, then a real symmetric rotation.
        const Complex ph = std::conj(b) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex vpp = c, vpq = s, vqp = -s * ph, vqq = c * ph;
        for (Eigen::Index k = 0; k < dim; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (Eigen::Index k = 0; k < dim; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < dim; ++k) {
          const Complex ukp = u(k, p);
          const Complex ukq = u(k, q);
          u(k, p) = ukp * vpp + ukq * vqp;
          u(k, q) = ukp * vpq + ukq * vqq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  out.values.resize(dim);
  out.vectors.resize(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    out.values[k] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    out.vectors.col(k) = u.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

GroundState ground_state(const HermitianOperator& h) {
  const Eigen::Index dim = static_cast<Eigen::Index>(h.dim());
  if (dim == 0 || dim > 1024 || !std::has_single_bit(static_cast<std::size_t>(dim))) {
    throw ResourceError("ground_state needs a dimension 2^n <= 1024, got " + std::to_string(dim));
  }
  const Eigen::MatrixXcd& m = h.matrix();
  const double cut = 1e-15 * std::max(1.0, m.cwiseAbs().maxCoeff());

  // Connected components of the nonzero pattern.
  std::vector<int> comp(static_cast<std::size_t>(dim), -1);
  std::vector<std::vector<Eigen::Index>> blocks;
  for (Eigen::Index s = 0; s < dim; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::vector<Eigen::Index> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      blocks.back().push_back(i);
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (comp[static_cast<std::size_t>(j)] < 0 && std::abs(m(i, j)) > cut) {
          comp[static_cast<std::size_t>(j)] = id;
          stack.push_back(j);
        }
      }
    }
  }

  GroundState best;
  bool found = false;
  for (auto& idx : blocks) {
    std::sort(idx.begin(), idx.end());
    const Eigen::Index k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    }
    const Eigensystem es = jacobi_eigensystem(sub);
    if (!found || es.values[0] < best.energy) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
      for (Eigen::Index r = 0; r < k; ++r) v[idx[static_cast<std::size_t>(r)]] = es.vectors(r, 0);
      v.normalize();
      best.energy = es.values[0];
      best.state = Statevector::from_amplitudes(std::countr_zero(static_cast<std::size_t>(dim)), std::move(v));
      found = true;
    }
  }
  return best;
}

}  // namespace qdla
