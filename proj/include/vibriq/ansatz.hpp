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
#include <string_view>
#include <utility>
#include <vector>

#include "vibriq/circuit.hpp"
#include "vibriq/pauli.hpp"
#include "vibriq/second_quantization.hpp"

namespace vibriq {

/// Excitation out of the reference (modal 0 of every mode occupied) into
/// virtual modal `virtuals[i]` of `modes[i]`.
struct Excitation {
  int order = 1;
  std::vector<std::size_t> modes;
  std::vector<std::size_t> virtuals;
  std::vector<std::size_t> occupied_qubits;
  std::vector<std::size_t> virtual_qubits;

  /// Involved qubits in ascending order: occ_l, virt_l[, occ_m, virt_m].
  std::vector<std::size_t> qubits() const;
  friend bool operator==(const Excitation&, const Excitation&) = default;
};

/// Singles (every mode, virtuals ascending) followed by doubles (mode pairs
/// l < m, virtuals ascending). Sizes: sum(N_l - 1) and
/// sum_{l<m} (N_l - 1)(N_m - 1).
std::vector<Excitation> excitation_list(const QubitLayout& layout, int max_order = 2);

/// The excitation operator prod_modes a^+_virt a_occ as a Pauli sum.
PauliSum excitation_operator(const Excitation& exc, std::size_t num_qubits);

/// One X per mode register on the occupied-modal qubit.
Circuit reference_circuit(const QubitLayout& layout);

/// Appends exp(i * scale * theta_parameter * P) for the Pauli string P given
/// as (qubit, letter) pairs, using a basis change, a CNOT ladder and one RZ.
/// Costs 2 (weight - 1) CNOTs.
void append_pauli_rotation(Circuit& circuit,
                           std::span<const std::pair<std::size_t, Pauli>> letters,
                           std::size_t parameter, double scale);

/// Reference followed by exp(theta (T - T^+)) per excitation, factorized into
/// commuting Pauli-string exponentials: 4 CNOTs per single, 48 per double.
Circuit build_uvcc(const QubitLayout& layout, std::span<const Excitation> excitations,
                   int trotter_steps = 1);

/// Reference followed by one compact block per excitation: exp(i theta Y X)
/// for singles (2 CNOTs) and exp(i theta Y X X X) for doubles (6 CNOTs), the Y
/// on the lowest involved qubit. On the reference state each block equals the
/// corresponding UVCC exponential.
Circuit build_chc(const QubitLayout& layout, std::span<const Excitation> excitations);

enum class HeuristicKind { SwapRZ, RYRZ };

/// Variational part only (no reference state).
/// SwapRZ: RZ layer, then d x [all-pairs exp(i theta (XX + YY)) block, RZ layer].
/// RYRZ:   RY+RZ layer, then d x [all-pairs CNOT block, RY+RZ layer].
Circuit build_heuristic(HeuristicKind kind, std::size_t num_qubits, int depth);

/// reference_circuit(layout) followed by `body`.
Circuit with_reference(const QubitLayout& layout, const Circuit& body);

}  // namespace vibriq
