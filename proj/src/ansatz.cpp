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

#include "vibriq/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vibriq {

std::vector<std::size_t> Excitation::qubits() const {
  std::vector<std::size_t> q;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    q.push_back(occupied_qubits[i]);
    q.push_back(virtual_qubits[i]);
  }
  std::sort(q.begin(), q.end());
  return q;
}

std::vector<Excitation> excitation_list(const QubitLayout& layout, int max_order) {
  if (max_order < 1 || max_order > 2) {
    throw std::invalid_argument("excitation_list: max_order must be 1 or 2");
  }
  std::vector<Excitation> out;
  const std::size_t n_modes = layout.num_modes();
  for (std::size_t l = 0; l < n_modes; ++l) {
    for (std::size_t v = 1; v < layout.modal_count(l); ++v) {
      out.push_back({1, {l}, {v}, {layout.qubit(l, 0)}, {layout.qubit(l, v)}});
    }
  }
  if (max_order < 2) return out;
  for (std::size_t l = 0; l < n_modes; ++l) {
    for (std::size_t m = l + 1; m < n_modes; ++m) {
      for (std::size_t vl = 1; vl < layout.modal_count(l); ++vl) {
        for (std::size_t vm = 1; vm < layout.modal_count(m); ++vm) {
          out.push_back({2,
                         {l, m},
                         {vl, vm},
                         {layout.qubit(l, 0), layout.qubit(m, 0)},
                         {layout.qubit(l, vl), layout.qubit(m, vm)}});
        }
      }
    }
  }
  return out;
}

PauliSum excitation_operator(const Excitation& exc, std::size_t num_qubits) {
  PauliSum out = PauliSum::identity(num_qubits);
  for (std::size_t i = 0; i < exc.modes.size(); ++i) {
    out = out * creation_operator(num_qubits, exc.virtual_qubits[i]) *
          annihilation_operator(num_qubits, exc.occupied_qubits[i]);
  }
  return out;
}

Circuit reference_circuit(const QubitLayout& layout) {
  Circuit c(layout.num_qubits());
  for (std::size_t l = 0; l < layout.num_modes(); ++l) c.x(layout.qubit(l, 0));
  return c;
}

void append_pauli_rotation(Circuit& circuit,
                           std::span<const std::pair<std::size_t, Pauli>> letters,
                           std::size_t parameter, double scale) {
  std::vector<std::pair<std::size_t, Pauli>> active;
  for (const auto& l : letters) {
    if (l.second != Pauli::I) active.push_back(l);
  }
  if (active.empty()) return;  // global phase
  constexpr double kHalfPi = std::numbers::pi / 2.0;

  for (const auto& [q, p] : active) {
    if (p == Pauli::X) circuit.h(q);
    if (p == Pauli::Y) circuit.rotation(GateKind::RX, q, kHalfPi);
  }
  for (std::size_t i = 0; i + 1 < active.size(); ++i) {
    circuit.cnot(active[i].first, active[i + 1].first);
  }
  // RZ(t) = exp(-i t Z / 2), so exp(i a Z..Z) needs t = -2a.
  circuit.rotation(GateKind::RZ, active.back().first, parameter, -2.0 * scale);
  for (std::size_t i = active.size() - 1; i > 0; --i) {
    circuit.cnot(active[i - 1].first, active[i].first);
  }
  for (const auto& [q, p] : active) {
    if (p == Pauli::X) circuit.h(q);
    if (p == Pauli::Y) circuit.rotation(GateKind::RX, q, -kHalfPi);
  }
}

namespace {

// Generator T - T^+ of one excitation written on its involved qubits only, so
// layouts wider than the 64-qubit Pauli limit can still be built.
PauliSum local_generator(const Excitation& exc, const std::vector<std::size_t>& qubits) {
  auto local = [&](std::size_t global) {
    return static_cast<std::size_t>(
        std::lower_bound(qubits.begin(), qubits.end(), global) - qubits.begin());
  };
  Excitation mapped = exc;
  for (auto& q : mapped.occupied_qubits) q = local(q);
  for (auto& q : mapped.virtual_qubits) q = local(q);
  const PauliSum t = excitation_operator(mapped, qubits.size());
  return t - t.adjoint();
}

std::vector<std::pair<std::size_t, Pauli>> global_letters(const PauliString& s,
                                                          const std::vector<std::size_t>& qubits) {
  std::vector<std::pair<std::size_t, Pauli>> out;
  for (std::size_t i = 0; i < qubits.size(); ++i) out.emplace_back(qubits[i], s.at(i));
  return out;
}

}  // namespace

Circuit build_uvcc(const QubitLayout& layout, std::span<const Excitation> excitations,
                   int trotter_steps) {
  if (trotter_steps < 1) throw std::invalid_argument("build_uvcc: trotter_steps must be >= 1");
  Circuit c = reference_circuit(layout);
  std::vector<std::size_t> params;
  for (std::size_t i = 0; i < excitations.size(); ++i) params.push_back(c.add_parameter());

  // exp(theta G) with G = sum_j (i c_j) P_j and mutually commuting P_j.
  std::vector<std::vector<std::size_t>> qubits;
  std::vector<PauliSum> generators;
  for (const auto& exc : excitations) {
    qubits.push_back(exc.qubits());
    generators.push_back(local_generator(exc, qubits.back()));
  }
  const double inv_steps = 1.0 / trotter_steps;
  for (int step = 0; step < trotter_steps; ++step) {
    for (std::size_t e = 0; e < excitations.size(); ++e) {
      for (const auto& term : generators[e].terms()) {
        const auto letters = global_letters(term.string, qubits[e]);
        append_pauli_rotation(c, letters, params[e], term.coeff.imag() * inv_steps);
      }
    }
  }
  return c;
}

Circuit build_chc(const QubitLayout& layout, std::span<const Excitation> excitations) {
  Circuit c = reference_circuit(layout);
  for (const auto& exc : excitations) {
    const std::size_t p = c.add_parameter();
    const auto qs = exc.qubits();
    std::vector<std::pair<std::size_t, Pauli>> letters;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      letters.emplace_back(qs[i], i == 0 ? Pauli::Y : Pauli::X);
    }
    append_pauli_rotation(c, letters, p, 1.0);
  }
  return c;
}

Circuit build_heuristic(HeuristicKind kind, std::size_t num_qubits, int depth) {
  if (depth < 1) throw std::invalid_argument("build_heuristic: depth must be >= 1");
  if (num_qubits < 1) throw std::invalid_argument("build_heuristic: need at least one qubit");
  Circuit c(num_qubits);
  auto rotation_layer = [&] {
    for (std::size_t q = 0; q < num_qubits; ++q) {
      if (kind == HeuristicKind::RYRZ) c.rotation(GateKind::RY, q, c.add_parameter(), 1.0);
      c.rotation(GateKind::RZ, q, c.add_parameter(), 1.0);
    }
  };
  rotation_layer();
  for (int d = 0; d < depth; ++d) {
    for (std::size_t i = 0; i < num_qubits; ++i) {
      for (std::size_t j = i + 1; j < num_qubits; ++j) {
        if (kind == HeuristicKind::RYRZ) {
          c.cnot(i, j);
          continue;
        }
        // XX and YY commute, so exp(i t (XX + YY)) factorizes exactly.
        const std::size_t p = c.add_parameter();
        const std::pair<std::size_t, Pauli> xx[] = {{i, Pauli::X}, {j, Pauli::X}};
        const std::pair<std::size_t, Pauli> yy[] = {{i, Pauli::Y}, {j, Pauli::Y}};
        append_pauli_rotation(c, xx, p, 1.0);
        append_pauli_rotation(c, yy, p, 1.0);
      }
    }
    rotation_layer();
  }
  return c;
}

Circuit with_reference(const QubitLayout& layout, const Circuit& body) {
  Circuit c = reference_circuit(layout);
  c.append(body);
  return c;
}

}  // namespace vibriq
