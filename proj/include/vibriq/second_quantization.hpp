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
#include <span>
#include <vector>

#include "vibriq/pauli.hpp"
#include "vibriq/pes.hpp"

namespace vibriq {

/// a^+_{create} a_{annihilate} acting on the register of `mode`.
struct SqFactor {
  std::size_t mode = 0;
  std::size_t create = 0;
  std::size_t annihilate = 0;

  friend bool operator==(const SqFactor&, const SqFactor&) = default;
};

/// coeff * prod of per-mode factors, modes strictly increasing. An empty
/// factor list is a constant (the reference energy).
struct SqTerm {
  double coeff = 0.0;
  std::vector<SqFactor> factors;
};

/// One qubit per modal. Mode registers are concatenated in mode order; inside
/// a register modal 0 (lowest energy, occupied in the reference) comes first.
class QubitLayout {
 public:
  explicit QubitLayout(std::vector<std::size_t> modal_counts);
  static QubitLayout uniform(std::size_t num_modes, std::size_t modals_per_mode);

  std::size_t num_modes() const { return counts_.size(); }
  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t modal_count(std::size_t mode) const { return counts_.at(mode); }
  std::size_t offset(std::size_t mode) const { return offsets_.at(mode); }
  std::size_t qubit(std::size_t mode, std::size_t modal) const;
  const std::vector<std::size_t>& modal_counts() const { return counts_; }

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> offsets_;
  std::size_t num_qubits_ = 0;
};

inline constexpr std::size_t kDefaultBodyOrder = 2;

/// n-mode second-quantized Hamiltonian from modal integrals. Emits the
/// constant v0 (when nonzero), the full one-body block of every mode, and for
/// every multi-mode PES term the tensor expansion of its per-mode Q-power
/// matrices. Throws if a term couples more than `n_body` modes.
std::vector<SqTerm> build_sq_hamiltonian(const PesExpansion& pes,
                                         std::span<const ModeIntegrals> integrals,
                                         std::size_t n_body = kDefaultBodyOrder);

/// Qubit image of a^+ on qubit q: (X - iY)/2 = |1><0|.
PauliSum creation_operator(std::size_t num_qubits, std::size_t qubit);
/// Qubit image of a on qubit q: (X + iY)/2 = |0><1|.
PauliSum annihilation_operator(std::size_t num_qubits, std::size_t qubit);

PauliSum map_to_pauli(std::span<const SqTerm> terms, const QubitLayout& layout);

/// N_l = sum over the register of (I - Z_k)/2.
PauliSum number_operator(const QubitLayout& layout, std::size_t mode);

/// <H> + mu * sum_l (<N_l> - 1)^2, with the expectations inside the square.
double penalty_objective(double h_expectation, std::span<const double> number_expectations,
                         double mu);

/// Operator form mu * sum_l (N_l - I)^2. Vanishes on the physical subspace but
/// differs from `penalty_objective` on superpositions.
PauliSum penalty_operator(const QubitLayout& layout, double mu);

/// PES -> modals -> second-quantized terms -> qubit operator.
struct VibrationalHamiltonian {
  QubitLayout layout;
  ModalBasis basis;
  std::vector<SqTerm> terms;
  PauliSum qubit_operator;
};

VibrationalHamiltonian build_vibrational_hamiltonian(
    const PesExpansion& pes, std::span<const std::size_t> modal_counts,
    Eigen::Index primitive_dim = kDefaultPrimitiveDim, std::size_t n_body = kDefaultBodyOrder);

}  // namespace vibriq
