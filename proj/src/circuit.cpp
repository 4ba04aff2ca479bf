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

#include "vibriq/circuit.hpp"

#include <stdexcept>

namespace vibriq {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::PHASE: return "phase";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::RX, GateKind::RY, GateKind::RZ,
                     GateKind::PHASE, GateKind::CNOT}) {
    if (gate_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
         kind == GateKind::PHASE;
}

double Gate::resolved_angle(std::span<const double> params) const {
  if (!parameter) return angle;
  if (*parameter >= params.size()) throw std::out_of_range("Gate: parameter index out of range");
  return angle * params[*parameter];
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_parameters)
    : num_qubits_(num_qubits), num_parameters_(num_parameters) {}

Circuit& Circuit::x(std::size_t q) { return add({GateKind::X, {q, 0}, std::nullopt, 0.0}); }

Circuit& Circuit::h(std::size_t q) { return add({GateKind::H, {q, 0}, std::nullopt, 0.0}); }

Circuit& Circuit::cnot(std::size_t control, std::size_t target) {
  return add({GateKind::CNOT, {control, target}, std::nullopt, 0.0});
}

Circuit& Circuit::rotation(GateKind kind, std::size_t q, double angle) {
  return add({kind, {q, 0}, std::nullopt, angle});
}

Circuit& Circuit::rotation(GateKind kind, std::size_t q, std::size_t parameter, double scale) {
  return add({kind, {q, 0}, parameter, scale});
}

Circuit& Circuit::add(const Gate& g) {
  if (g.qubits[0] >= num_qubits_ || (g.arity() == 2 && g.qubits[1] >= num_qubits_)) {
    throw std::out_of_range("Circuit: gate qubit index out of range");
  }
  if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1]) {
    throw std::invalid_argument("Circuit: CNOT control and target must differ");
  }
  if (g.parameter && !is_rotation(g.kind)) {
    throw std::invalid_argument("Circuit: only rotation gates take a parameter");
  }
  if (g.parameter && *g.parameter >= num_parameters_) {
    throw std::out_of_range("Circuit: parameter index out of range");
  }
  Gate stored = g;
  if (g.arity() == 1) stored.qubits[1] = 0;
  gates_.push_back(stored);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("Circuit::append: qubit-count mismatch");
  }
  const std::size_t shift = num_parameters_;
  num_parameters_ += other.num_parameters_;
  gates_.reserve(gates_.size() + other.gates_.size());
  for (Gate g : other.gates_) {
    if (g.parameter) *g.parameter += shift;
    gates_.push_back(g);
  }
  return *this;
}

ResourceCount count_resources(const Circuit& circuit) {
  ResourceCount r;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CNOT) ++r.cnot_count;
  }
  r.parameter_count = circuit.num_parameters();
  r.qubit_count = circuit.num_qubits();
  return r;
}

}  // namespace vibriq
