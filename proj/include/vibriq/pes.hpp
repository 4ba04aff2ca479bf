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

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace vibriq {

inline constexpr Eigen::Index kDefaultPrimitiveDim = 40;

/// coeff * prod_l Q_l^{p_l} in dimensionless normal coordinates (cm^-1).
struct PesTerm {
  double coeff = 0.0;
  std::map<std::size_t, int> powers;

  std::size_t coupling_order() const { return powers.size(); }
  int degree() const;
};

/// Polynomial n-body potential. Harmonic frequencies are held apart from the
/// anharmonic terms: the harmonic part of mode l contributes omega_l (k + 1/2)
/// and must not be repeated as a 0.5*omega*Q^2 term.
struct PesExpansion {
  std::vector<double> frequencies;
  double v0 = 0.0;
  std::vector<PesTerm> terms;
  int max_degree = 4;

  std::size_t num_modes() const { return frequencies.size(); }
  std::size_t max_coupling_order() const;
  /// Throws std::invalid_argument on a malformed expansion.
  void validate() const;
};

/// <i|Q^p|j> in the harmonic-oscillator number basis, Q = (a^+ + a)/sqrt(2).
/// Entries are exact (not powers of a truncated Q).
Eigen::MatrixXd ho_q_power_matrix(int power, Eigen::Index dim);

/// T + V^[l] for mode l in the primitive basis.
Eigen::MatrixXd one_body_matrix(const PesExpansion& pes, std::size_t mode,
                                Eigen::Index dim);

struct ModeModals {
  Eigen::MatrixXd coefficients;  // primitive_dim x N_l
  Eigen::VectorXd energies;      // ascending
};

struct ModalBasis {
  Eigen::Index primitive_dim = 0;
  std::vector<ModeModals> modes;

  std::vector<std::size_t> modal_counts() const;
};

/// Lowest N_l eigenpairs of each one-body Hamiltonian. Eigenvector sign is
/// fixed so that the largest-magnitude component is positive.
ModalBasis solve_modals(const PesExpansion& pes,
                        std::span<const std::size_t> modal_counts,
                        Eigen::Index primitive_dim = kDefaultPrimitiveDim);

struct ModeIntegrals {
  Eigen::MatrixXd one_body;                // N_l x N_l, diag(eps) up to roundoff
  std::map<int, Eigen::MatrixXd> q_power;  // p -> <phi_k|Q^p|phi_h>
};

/// Modal-basis integrals for every mode: the one-body operator and every
/// power of Q_l that appears in a multi-mode coupling term.
std::vector<ModeIntegrals> modal_operator_matrices(const ModalBasis& basis,
                                                   const PesExpansion& pes);

}  // namespace vibriq
