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

#include "vibriq/pes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace vibriq {

int PesTerm::degree() const {
  int d = 0;
  for (const auto& [mode, p] : powers) d += p;
  return d;
}

std::size_t PesExpansion::max_coupling_order() const {
  std::size_t n = 0;
  for (const auto& t : terms) n = std::max(n, t.coupling_order());
  return n;
}

void PesExpansion::validate() const {
  if (frequencies.empty()) throw std::invalid_argument("PES: at least one mode is required");
  for (std::size_t l = 0; l < frequencies.size(); ++l) {
    if (!(frequencies[l] > 0.0) || !std::isfinite(frequencies[l])) {
      throw std::invalid_argument("PES: frequency of mode " + std::to_string(l) +
                                  " must be positive");
    }
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.powers.empty()) {
      throw std::invalid_argument("PES: term " + std::to_string(i) + " touches no mode");
    }
    for (const auto& [mode, p] : t.powers) {
      if (mode >= frequencies.size()) {
        throw std::invalid_argument("PES: term " + std::to_string(i) + " references mode " +
                                    std::to_string(mode) + " beyond num_modes");
      }
      if (p < 1) {
        throw std::invalid_argument("PES: term " + std::to_string(i) +
                                    " has an exponent below 1");
      }
    }
    if (t.degree() > max_degree) {
      throw std::invalid_argument("PES: term " + std::to_string(i) + " has degree " +
                                  std::to_string(t.degree()) + " > max degree " +
                                  std::to_string(max_degree));
    }
    if (!std::isfinite(t.coeff)) {
      throw std::invalid_argument("PES: term " + std::to_string(i) + " has a non-finite coefficient");
    }
  }
}

Eigen::MatrixXd ho_q_power_matrix(int power, Eigen::Index dim) {
  if (power < 1 || dim < 1) {
    throw std::invalid_argument("ho_q_power_matrix: power and dim must be >= 1");
  }
  // Apply Q column by column in a space wide enough that no ladder step
  // falls off the end before it can return into the kept block.
  const Eigen::Index wide = dim + power;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd out(dim, dim);
  Eigen::VectorXd v(wide);
  Eigen::VectorXd next(wide);
  for (Eigen::Index j = 0; j < dim; ++j) {
    v.setZero();
    v(j) = 1.0;
    for (int step = 0; step < power; ++step) {
      next.setZero();
      for (Eigen::Index k = 0; k < wide; ++k) {
        if (v(k) == 0.0) continue;
        if (k > 0) next(k - 1) += std::sqrt(static_cast<double>(k)) * inv_sqrt2 * v(k);
        if (k + 1 < wide) next(k + 1) += std::sqrt(static_cast<double>(k + 1)) * inv_sqrt2 * v(k);
      }
      v.swap(next);
    }
    out.col(j) = v.head(dim);
  }
  // Exact symmetry; the two triangles agree only up to roundoff otherwise.
  return 0.5 * (out + out.transpose());
}

Eigen::MatrixXd one_body_matrix(const PesExpansion& pes, std::size_t mode, Eigen::Index dim) {
  if (mode >= pes.num_modes()) throw std::out_of_range("one_body_matrix: mode out of range");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    h(k, k) = pes.frequencies[mode] * (static_cast<double>(k) + 0.5);
  }
  std::map<int, Eigen::MatrixXd> cache;
  for (const auto& t : pes.terms) {
    if (t.coupling_order() != 1 || t.powers.begin()->first != mode) continue;
    const int p = t.powers.begin()->second;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, ho_q_power_matrix(p, dim)).first;
    h += t.coeff * it->second;
  }
  return h;
}

std::vector<std::size_t> ModalBasis::modal_counts() const {
  std::vector<std::size_t> out;
  out.reserve(modes.size());
  for (const auto& m : modes) out.push_back(static_cast<std::size_t>(m.energies.size()));
  return out;
}

ModalBasis solve_modals(const PesExpansion& pes, std::span<const std::size_t> modal_counts,
                        Eigen::Index primitive_dim) {
  pes.validate();
  if (modal_counts.size() != pes.num_modes()) {
    throw std::invalid_argument("solve_modals: need one modal count per mode");
  }
  ModalBasis basis;
  basis.primitive_dim = primitive_dim;
  basis.modes.reserve(pes.num_modes());
  for (std::size_t l = 0; l < pes.num_modes(); ++l) {
    const auto n_keep = static_cast<Eigen::Index>(modal_counts[l]);
    if (n_keep < 1 || n_keep > primitive_dim) {
      throw std::invalid_argument("solve_modals: modal count of mode " + std::to_string(l) +
                                  " must be in [1, primitive_dim]");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(one_body_matrix(pes, l, primitive_dim));
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("solve_modals: eigensolver failed for mode " + std::to_string(l));
    }
    ModeModals m;
    m.energies = solver.eigenvalues().head(n_keep);
    m.coefficients = solver.eigenvectors().leftCols(n_keep);
    for (Eigen::Index k = 0; k < n_keep; ++k) {
      Eigen::Index arg = 0;
      m.coefficients.col(k).cwiseAbs().maxCoeff(&arg);
      if (m.coefficients(arg, k) < 0.0) m.coefficients.col(k) *= -1.0;
    }
    basis.modes.push_back(std::move(m));
  }
  return basis;
}

std::vector<ModeIntegrals> modal_operator_matrices(const ModalBasis& basis,
                                                   const PesExpansion& pes) {
  if (basis.modes.size() != pes.num_modes()) {
    throw std::invalid_argument("modal_operator_matrices: basis and PES disagree on mode count");
  }
  const Eigen::Index n = basis.primitive_dim;
  std::vector<ModeIntegrals> out(pes.num_modes());
  for (std::size_t l = 0; l < pes.num_modes(); ++l) {
    const Eigen::MatrixXd& c = basis.modes[l].coefficients;
    out[l].one_body = c.transpose() * one_body_matrix(pes, l, n) * c;
  }
  for (const auto& t : pes.terms) {
    if (t.coupling_order() < 2) continue;
    for (const auto& [mode, p] : t.powers) {
      auto& slot = out[mode].q_power;
      if (slot.contains(p)) continue;
      const Eigen::MatrixXd& c = basis.modes[mode].coefficients;
      slot.emplace(p, c.transpose() * ho_q_power_matrix(p, n) * c);
    }
  }
  return out;
}

}  // namespace vibriq
