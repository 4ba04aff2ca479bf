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

#include "vibriq/noise.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "vibriq/ansatz.hpp"
#include "vibriq/parallel.hpp"
#include "vibriq/random.hpp"

namespace vibriq {

GateClass classify(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::CNOT: return GateClass::CX;
    case GateKind::H:
    case GateKind::PHASE: return GateClass::U2;
    case GateKind::RX:
      if (!gate.parameter && std::abs(std::abs(gate.angle) - std::numbers::pi / 2) < 1e-12) {
        return GateClass::U2;
      }
      return GateClass::U3;
    default: return GateClass::U3;
  }
}

double NoiseModel::depolarizing(GateClass c) const {
  switch (c) {
    case GateClass::U2: return p_u2;
    case GateClass::U3: return p_u3;
    case GateClass::CX: return p_cx;
  }
  return 0.0;
}

void NoiseModel::validate() const {
  for (double p : {p_u2, p_u3, p_cx}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("NoiseModel: probabilities must lie in [0, 1]");
    }
  }
}

namespace {

PauliString random_pauli(Rng& rng, const Gate& gate) {
  if (gate.arity() == 1) {
    const auto letter = static_cast<Pauli>(1 + rng.below(3));
    return PauliString::single(gate.qubits[0], letter);
  }
  const std::uint64_t k = 1 + rng.below(15);  // skip II
  const PauliString a = PauliString::single(gate.qubits[0], static_cast<Pauli>(k & 3U));
  const PauliString b = PauliString::single(gate.qubits[1], static_cast<Pauli>(k >> 2));
  return {a.x_bits() | b.x_bits(), a.z_bits() | b.z_bits()};
}

}  // namespace

StateVector noisy_trajectory(const Circuit& circuit, std::span<const double> params,
                             const NoiseModel& noise, std::uint64_t seed) {
  noise.validate();
  if (params.size() != circuit.num_parameters()) {
    throw std::invalid_argument("noisy_trajectory: parameter count mismatch");
  }
  StateVector state(circuit.num_qubits());
  Rng rng(seed);
  for (const auto& g : circuit.gates()) {
    state.apply(g, params);
    const double p = noise.depolarizing(classify(g));
    if (p == 0.0) continue;
    const double d2 = g.arity() == 1 ? 4.0 : 16.0;
    if (rng.uniform() < p * (d2 - 1.0) / d2) state.apply(random_pauli(rng, g));
  }
  return state;
}

ShotCounts sample_noisy(const Circuit& circuit, std::span<const double> params,
                        const NoiseModel& noise, std::uint64_t shots,
                        std::uint64_t trajectories, std::uint64_t seed) {
  if (shots == 0 || trajectories == 0) {
    throw std::invalid_argument("sample_noisy: shots and trajectories must be positive");
  }
  trajectories = std::min(trajectories, shots);
  std::vector<ShotCounts> parts(trajectories);
  parallel_for(trajectories, [&](std::size_t t) {
    const std::uint64_t share = shots / trajectories + (t < shots % trajectories ? 1 : 0);
    const StateVector s = noisy_trajectory(circuit, params, noise, derive_seed(seed, 2 * t));
    parts[t] = sample(s, share, derive_seed(seed, 2 * t + 1));
  });
  ShotCounts out;
  out.num_qubits = circuit.num_qubits();
  for (const auto& part : parts) {
    for (const auto& [bits, n] : part.counts) out.counts[bits] += n;
    out.shots += part.shots;
  }
  return out;
}

FidelityReport run_fidelity_experiment(const QubitLayout& layout,
                                       const FidelityExperimentConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("fidelity experiment: trials must be positive");
  if (!(config.theta_low <= config.theta_high)) {
    throw std::invalid_argument("fidelity experiment: parameter range bounds are not ordered");
  }
  config.noise.validate();
  const auto excitations = excitation_list(layout);
  const Circuit uvcc = build_uvcc(layout, excitations);
  const Circuit chc = build_chc(layout, excitations);

  FidelityReport report;
  report.modal_counts = layout.modal_counts();
  report.config = config;
  report.results = {{"uvccsd", count_resources(uvcc), {}, 0.0, 0.0},
                    {"chc", count_resources(chc), {}, 0.0, 0.0}};

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(config.seed, trial);
    Rng rng(derive_seed(trial_seed, 0));
    std::vector<double> theta(uvcc.num_parameters());
    for (auto& t : theta) t = rng.uniform(config.theta_low, config.theta_high);

    const ShotCounts reference = sample(run_circuit(uvcc, theta), config.shots,
                                        derive_seed(trial_seed, 1));
    const Circuit* circuits[] = {&uvcc, &chc};
    for (std::size_t a = 0; a < 2; ++a) {
      const ShotCounts noisy = sample_noisy(*circuits[a], theta, config.noise, config.shots,
                                            config.trajectories, derive_seed(trial_seed, 2 + a));
      report.results[a].fidelities.push_back(distribution_fidelity(noisy, reference));
    }
  }

  for (auto& r : report.results) {
    const double n = static_cast<double>(r.fidelities.size());
    r.mean = std::accumulate(r.fidelities.begin(), r.fidelities.end(), 0.0) / n;
    double ss = 0.0;
    for (double f : r.fidelities) ss += (f - r.mean) * (f - r.mean);
    r.stddev = r.fidelities.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  }
  return report;
}

}  // namespace vibriq
