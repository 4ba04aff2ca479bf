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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vibriq/circuit.hpp"
#include "vibriq/pauli.hpp"

namespace vibriq {

inline constexpr std::size_t kMaxStateQubits = 26;

/// Dense state on N qubits. Bit q of a basis index is the value of qubit q.
class StateVector {
 public:
  explicit StateVector(std::size_t num_qubits);
  StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);
  static StateVector basis_state(std::size_t num_qubits, std::uint64_t index);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  void normalize();

  /// In-place gate application.
  void apply(const Gate& gate, std::span<const double> params);
  /// In-place application of a phase-free Pauli string.
  void apply(const PauliString& pauli);

 private:
  void apply_single(std::size_t q, const Complex m[4]);

  std::size_t num_qubits_;
  std::vector<Complex> amps_;
};

StateVector apply_circuit(const Circuit& circuit, std::span<const double> params,
                          StateVector state);
/// Runs `circuit` on |0...0>.
StateVector run_circuit(const Circuit& circuit, std::span<const double> params);

/// <psi|op|psi> for any Pauli sum.
Complex expectation_value(const StateVector& state, const PauliSum& op);
/// Real expectation of a Hermitian sum; throws if the imaginary residue is
/// not negligible, which signals a non-Hermitian operator.
double expectation(const StateVector& state, const PauliSum& op);

/// |<a|b>|^2.
double state_fidelity(const StateVector& a, const StateVector& b);

/// Measurement record keyed by bitstring, qubit 0 leftmost.
struct ShotCounts {
  std::size_t num_qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> counts;

  void add(std::uint64_t index, std::uint64_t n = 1);
  friend bool operator==(const ShotCounts&, const ShotCounts&) = default;
};

std::string bitstring(std::uint64_t index, std::size_t num_qubits);

/// Multinomial draw from |amplitude|^2; deterministic for a fixed seed.
ShotCounts sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// 1 - sum|C_a - C_ref| / sum(C_a + C_ref) over all outcomes.
double distribution_fidelity(const ShotCounts& a, const ShotCounts& ref);

}  // namespace vibriq
