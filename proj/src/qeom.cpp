// Copyright 2026 The vibriq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "vibriq/qeom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vibriq/parallel.hpp"

namespace vibriq {

EomOperators build_eom_operators(const QubitLayout& layout, int max_order) {
  EomOperators out;
  out.excitations = excitation_list(layout, max_order);
  for (const auto& e : out.excitations) {
    out.ops.push_back(excitation_operator(e, layout.num_qubits()));
    out.adjoints.push_back(out.ops.back().adjoint());
  }
  return out;
}

PauliSum double_commutator(const PauliSum& a, const PauliSum& h, const PauliSum& b) {
  PauliSum out = commutator(commutator(a, h), b) + commutator(a, commutator(h, b));
  out *= 0.5;
  return out;
}

EomMatrices compute_matrices(const StateVector& ground, const PauliSum& h, const EomOperators& ops) {
  if (ground.num_qubits() != h.num_qubits()) {
    throw std::invalid_argument("compute_matrices: state and Hamiltonian qubit counts differ");
  }
  const auto n = static_cast<Eigen::Index>(ops.size());
  EomMatrices r{Eigen::MatrixXcd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n),
                Eigen::MatrixXcd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n)};
  const std::size_t count = ops.size();
  parallel_for(count * count, [&](std::size_t k) {
    const std::size_t mu = k / count;
    const std::size_t nu = k % count;
    const PauliSum& ad = ops.adjoints[mu];
    const auto i = static_cast<Eigen::Index>(mu);
    const auto j = static_cast<Eigen::Index>(nu);
    r.m(i, j) = expectation_value(ground, double_commutator(ad, h, ops.ops[nu]));
    r.q(i, j) = -expectation_value(ground, double_commutator(ad, h, ops.adjoints[nu]));
    r.v(i, j) = expectation_value(ground, commutator(ad, ops.ops[nu]));
    r.w(i, j) = -expectation_value(ground, commutator(ad, ops.adjoints[nu]));
  });
  return r;
}

QeomResult solve_pseudo_eigenproblem(const EomMatrices& mats, double threshold,
                                     double metric_tolerance) {
  const Eigen::Index n = mats.m.rows();
  for (const auto* x : {&mats.q, &mats.v, &mats.w}) {
    if (x->rows() != n || x->cols() != n || mats.m.cols() != n) {
      throw std::invalid_argument("solve_pseudo_eigenproblem: matrix dimensions disagree");
    }
  }
  QeomResult out;
  out.pool_size = static_cast<std::size_t>(n);
  if (n == 0) return out;

  Eigen::MatrixXcd a(2 * n, 2 * n);
  Eigen::MatrixXcd b(2 * n, 2 * n);
  a << mats.m, mats.q, mats.q.conjugate(), mats.m.conjugate();
  b << mats.v, mats.w, -mats.w.conjugate(), -mats.v.conjugate();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
  const auto& sv = svd.singularValues();
  const double cutoff = metric_tolerance * std::max(1.0, sv(0));
  const auto null_dim = (sv.array() < cutoff).count();
  if (null_dim > 0) {
    throw std::runtime_error("qEOM metric is singular: near-null subspace of dimension " +
                             std::to_string(null_dim) + " out of " + std::to_string(2 * n));
  }

  const Eigen::MatrixXcd reduced = b.partialPivLu().solve(a);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(reduced, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("qEOM eigensolver failed");
  for (Eigen::Index k = 0; k < 2 * n; ++k) out.eigenvalues.push_back(solver.eigenvalues()(k));
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const auto& x, const auto& y) { return x.real() < y.real(); });
  for (const auto& e : out.eigenvalues) {
    if (e.real() > threshold) out.energies.push_back(e.real());
  }
  out.filtered_count = out.eigenvalues.size() - out.energies.size();
  return out;
}

QeomResult excited_states(const StateVector& ground, const PauliSum& h, const QubitLayout& layout,
                          double threshold) {
  const EomOperators ops = build_eom_operators(layout);
  return solve_pseudo_eigenproblem(compute_matrices(ground, h, ops), threshold);
}

}  // namespace vibriq
