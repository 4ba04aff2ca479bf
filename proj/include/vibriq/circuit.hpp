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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vibriq {

enum class GateKind { X, H, RX, RY, RZ, PHASE, CNOT };

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);
bool is_rotation(GateKind kind);

/// A gate with an optional symbolic angle. Rotation gates carry exactly one
/// binding: a constant `angle`, or `angle * params[*parameter]` when a
/// parameter is bound (in which case `angle` is the scale).
/// RX(t) = exp(-i t X / 2) and likewise for RY/RZ; PHASE(t) = diag(1, e^{it}).
struct Gate {
  GateKind kind = GateKind::X;
  std::array<std::size_t, 2> qubits{};  // {target} or {control, target}
  std::optional<std::size_t> parameter;
  double angle = 0.0;

  std::size_t arity() const { return kind == GateKind::CNOT ? 2 : 1; }
  double resolved_angle(std::span<const double> params) const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits = 0, std::size_t num_parameters = 0);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_parameters() const { return num_parameters_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Reserves a fresh parameter slot and returns its index.
  std::size_t add_parameter() { return num_parameters_++; }

  Circuit& x(std::size_t q);
  Circuit& h(std::size_t q);
  Circuit& cnot(std::size_t control, std::size_t target);
  Circuit& rotation(GateKind kind, std::size_t q, double angle);
  Circuit& rotation(GateKind kind, std::size_t q, std::size_t parameter, double scale);
  /// Appends a validated gate.
  Circuit& add(const Gate& g);

  /// Appends `other`'s gates; its parameter indices are shifted past ours.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_;
  std::size_t num_parameters_;
  std::vector<Gate> gates_;
};

struct ResourceCount {
  std::size_t cnot_count = 0;
  std::size_t parameter_count = 0;
  std::size_t qubit_count = 0;

  friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
};

ResourceCount count_resources(const Circuit& circuit);

}  // namespace vibriq
