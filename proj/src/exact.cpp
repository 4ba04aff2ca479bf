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


#include "vibriq/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace vibriq {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("dense work limited to " + std::to_string(kMaxDenseQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> physical_solver(const PauliSum& h,
                                                                const QubitLayout& layout) {
  if (h.num_qubits() != layout.num_qubits()) {
    throw std::invalid_argument("physical spectrum: operator and layout qubit counts differ");
  }
  if (!h.is_hermitian()) throw std::invalid_argument("physical spectrum: operator is not Hermitian");
  const PhysicalProjector proj(layout);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(proj.project(dense_matrix(h)));
  if (solver.info() != Eigen::Success) throw std::runtime_error("physical spectrum: eigensolver failed");
  return solver;
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliSum& op) {
  check_size(op.num_qubits());
  const std::uint64_t dim = std::uint64_t{1} << op.num_qubits();
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : op.terms()) {
    const std::uint64_t x = t.string.x_bits();
    const std::uint64_t z = t.string.z_bits();
    const Complex c = t.coeff * kIPow[std::popcount(x & z) % 4];
    for (std::uint64_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(j ^ x), static_cast<Eigen::Index>(j)) += sign * c;
    }
  }
  return out;
}

PhysicalProjector::PhysicalProjector(QubitLayout l) : layout(std::move(l)) {
  check_size(layout.num_qubits());
  indices.push_back(0);
  for (std::size_t m = 0; m < layout.num_modes(); ++m) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t base : indices) {
      for (std::size_t k = 0; k < layout.modal_count(m); ++k) {
        next.push_back(base | (std::uint64_t{1} << layout.qubit(m, k)));
      }
    }
    indices = std::move(next);
  }
  std::sort(indices.begin(), indices.end());
}

Eigen::MatrixXcd PhysicalProjector::project(const Eigen::MatrixXcd& full) const {
  const std::uint64_t dim = std::uint64_t{1} << layout.num_qubits();
  if (static_cast<std::uint64_t>(full.rows()) != dim || full.rows() != full.cols()) {
    throw std::invalid_argument("PhysicalProjector: matrix does not match the layout");
  }
  const auto n = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = full(static_cast<Eigen::Index>(indices[i]), static_cast<Eigen::Index>(indices[j]));
    }
  }
  return out;
}

StateVector PhysicalProjector::embed(const Eigen::VectorXcd& v) const {
  if (static_cast<std::size_t>(v.size()) != indices.size()) {
    throw std::invalid_argument("PhysicalProjector: vector does not match the subspace");
  }
  std::vector<Complex> amps(std::size_t{1} << layout.num_qubits(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < indices.size(); ++i) amps[indices[i]] = v(static_cast<Eigen::Index>(i));
  return StateVector(layout.num_qubits(), std::move(amps));
}

std::vector<double> physical_spectrum(const PauliSum& h, const QubitLayout& layout) {
  const auto solver = physical_solver(h, layout);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

StateVector physical_ground_state(const PauliSum& h, const QubitLayout& layout) {
  const auto solver = physical_solver(h, layout);
  Eigen::VectorXcd v = solver.eigenvectors().col(0);
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::abs(v(big)) / v(big);
  return PhysicalProjector(layout).embed(v);
}

}  // namespace vibriq
