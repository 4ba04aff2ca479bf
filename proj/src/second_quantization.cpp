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

#include "vibriq/second_quantization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vibriq {

QubitLayout::QubitLayout(std::vector<std::size_t> modal_counts) : counts_(std::move(modal_counts)) {
  if (counts_.empty()) throw std::invalid_argument("QubitLayout: at least one mode is required");
  offsets_.reserve(counts_.size());
  for (std::size_t l = 0; l < counts_.size(); ++l) {
    if (counts_[l] < 1) {
      throw std::invalid_argument("QubitLayout: mode " + std::to_string(l) +
                                  " needs at least one modal");
    }
    offsets_.push_back(num_qubits_);
    num_qubits_ += counts_[l];
  }
}

QubitLayout QubitLayout::uniform(std::size_t num_modes, std::size_t modals_per_mode) {
  return QubitLayout(std::vector<std::size_t>(num_modes, modals_per_mode));
}

std::size_t QubitLayout::qubit(std::size_t mode, std::size_t modal) const {
  if (mode >= counts_.size() || modal >= counts_[mode]) {
    throw std::out_of_range("QubitLayout: (mode " + std::to_string(mode) + ", modal " +
                            std::to_string(modal) + ") out of range");
  }
  return offsets_[mode] + modal;
}

std::vector<SqTerm> build_sq_hamiltonian(const PesExpansion& pes,
                                         std::span<const ModeIntegrals> integrals,
                                         std::size_t n_body) {
  if (n_body < 1) throw std::invalid_argument("build_sq_hamiltonian: n_body must be >= 1");
  pes.validate();
  if (integrals.size() != pes.num_modes()) {
    throw std::invalid_argument("build_sq_hamiltonian: need integrals for every mode");
  }
  for (std::size_t i = 0; i < pes.terms.size(); ++i) {
    if (pes.terms[i].coupling_order() > n_body) {
      throw std::invalid_argument("build_sq_hamiltonian: PES term " + std::to_string(i) +
                                  " couples " + std::to_string(pes.terms[i].coupling_order()) +
                                  " modes, above the " + std::to_string(n_body) +
                                  "-body truncation");
    }
  }

  std::vector<SqTerm> out;
  if (pes.v0 != 0.0) out.push_back({pes.v0, {}});

  for (std::size_t l = 0; l < integrals.size(); ++l) {
    const Eigen::MatrixXd& h = integrals[l].one_body;
    // Off-diagonal entries of an eigenbasis are pure roundoff.
    const double floor = 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff());
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
      for (Eigen::Index j = 0; j < h.cols(); ++j) {
        const double v = 0.5 * (h(k, j) + h(j, k));
        if (k != j && std::abs(v) <= floor) continue;
        out.push_back({v, {{l, static_cast<std::size_t>(k), static_cast<std::size_t>(j)}}});
      }
    }
  }

  for (const auto& term : pes.terms) {
    if (term.coupling_order() < 2) continue;
    std::vector<const Eigen::MatrixXd*> mats;
    std::vector<std::size_t> modes;
    for (const auto& [mode, p] : term.powers) {
      const auto it = integrals[mode].q_power.find(p);
      if (it == integrals[mode].q_power.end()) {
        throw std::invalid_argument("build_sq_hamiltonian: missing Q^" + std::to_string(p) +
                                    " integrals for mode " + std::to_string(mode));
      }
      mats.push_back(&it->second);
      modes.push_back(mode);
    }
    // Enumerate every (create, annihilate) pair of every involved mode.
    std::size_t combos = 1;
    for (const auto* m : mats) combos *= static_cast<std::size_t>(m->rows() * m->rows());
    for (std::size_t idx = 0; idx < combos; ++idx) {
      SqTerm t{term.coeff, {}};
      t.factors.reserve(modes.size());
      std::size_t rest = idx;
      for (std::size_t i = modes.size(); i-- > 0;) {
        const auto n = static_cast<std::size_t>(mats[i]->rows());
        const std::size_t h = rest % n;
        rest /= n;
        const std::size_t k = rest % n;
        rest /= n;
        t.coeff *= (*mats[i])(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(h));
        t.factors.push_back({modes[i], k, h});
      }
      std::reverse(t.factors.begin(), t.factors.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

PauliSum creation_operator(std::size_t num_qubits, std::size_t qubit) {
  return PauliSum(num_qubits, {{PauliString::single(qubit, Pauli::X), {0.5, 0.0}},
                               {PauliString::single(qubit, Pauli::Y), {0.0, -0.5}}});
}

PauliSum annihilation_operator(std::size_t num_qubits, std::size_t qubit) {
  return PauliSum(num_qubits, {{PauliString::single(qubit, Pauli::X), {0.5, 0.0}},
                               {PauliString::single(qubit, Pauli::Y), {0.0, 0.5}}});
}

namespace {

PauliSum occupation(std::size_t num_qubits, std::size_t qubit) {
  return PauliSum(num_qubits, {{PauliString{}, 0.5}, {PauliString::single(qubit, Pauli::Z), -0.5}});
}

}  // namespace

PauliSum map_to_pauli(std::span<const SqTerm> terms, const QubitLayout& layout) {
  const std::size_t n = layout.num_qubits();
  if (n > kMaxPauliQubits) {
    throw std::invalid_argument("map_to_pauli: layout has " + std::to_string(n) +
                                " qubits, above the 64-qubit Pauli limit");
  }
  std::vector<PauliTerm> all;
  for (const auto& t : terms) {
    PauliSum product = PauliSum::identity(n, t.coeff);
    std::size_t last_mode = 0;
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const SqFactor& f = t.factors[i];
      if (i > 0 && f.mode <= last_mode) {
        throw std::invalid_argument("map_to_pauli: factor modes must be strictly increasing");
      }
      last_mode = f.mode;
      const std::size_t qc = layout.qubit(f.mode, f.create);
      const std::size_t qa = layout.qubit(f.mode, f.annihilate);
      if (qc == qa) {
        product = multiply(product, occupation(n, qc), 0.0);
      } else {
        product = multiply(product,
                           multiply(creation_operator(n, qc), annihilation_operator(n, qa), 0.0),
                           0.0);
      }
    }
    all.insert(all.end(), product.terms().begin(), product.terms().end());
  }
  PauliSum out(n, std::move(all));
  // A Hermitian input leaves only roundoff in the imaginary parts.
  std::vector<PauliTerm> cleaned;
  cleaned.reserve(out.size());
  const double floor = kDropTolerance * std::max(1.0, out.one_norm());
  for (const auto& t : out.terms()) {
    Complex c = t.coeff;
    if (std::abs(c.imag()) <= floor) c.imag(0.0);
    cleaned.push_back({t.string, c});
  }
  return PauliSum(n, std::move(cleaned));
}

PauliSum number_operator(const QubitLayout& layout, std::size_t mode) {
  if (mode >= layout.num_modes()) throw std::out_of_range("number_operator: mode out of range");
  const std::size_t n = layout.num_qubits();
  PauliSum out(n);
  for (std::size_t k = 0; k < layout.modal_count(mode); ++k) {
    out += occupation(n, layout.qubit(mode, k));
  }
  return out;
}

double penalty_objective(double h_expectation, std::span<const double> number_expectations,
                         double mu) {
  if (mu < 0.0) throw std::invalid_argument("penalty_objective: mu must be >= 0");
  double s = 0.0;
  for (double n : number_expectations) s += (n - 1.0) * (n - 1.0);
  return h_expectation + mu * s;
}

PauliSum penalty_operator(const QubitLayout& layout, double mu) {
  const std::size_t n = layout.num_qubits();
  PauliSum out(n);
  for (std::size_t l = 0; l < layout.num_modes(); ++l) {
    const PauliSum shifted = number_operator(layout, l) - PauliSum::identity(n);
    out += shifted * shifted;
  }
  return out * Complex(mu);
}

VibrationalHamiltonian build_vibrational_hamiltonian(const PesExpansion& pes,
                                                     std::span<const std::size_t> modal_counts,
                                                     Eigen::Index primitive_dim,
                                                     std::size_t n_body) {
  pes.validate();
  if (modal_counts.size() != pes.num_modes()) {
    throw std::invalid_argument("modal counts given for " + std::to_string(modal_counts.size()) +
                                " modes, PES has " + std::to_string(pes.num_modes()));
  }
  QubitLayout layout({modal_counts.begin(), modal_counts.end()});
  ModalBasis basis = solve_modals(pes, modal_counts, primitive_dim);
  const auto integrals = modal_operator_matrices(basis, pes);
  auto terms = build_sq_hamiltonian(pes, integrals, n_body);
  PauliSum op = map_to_pauli(terms, layout);
  return {std::move(layout), std::move(basis), std::move(terms), std::move(op)};
}

}  // namespace vibriq
