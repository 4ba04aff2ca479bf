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
#include <span>
#include <string>
#include <vector>

#include "vibriq/circuit.hpp"
#include "vibriq/second_quantization.hpp"
#include "vibriq/statevector.hpp"

namespace vibriq {

/// U2: H, PHASE and fixed quarter-turn RX basis changes. U3: every other
/// single-qubit gate. CX: CNOT.
enum class GateClass { U2, U3, CX };
GateClass classify(const Gate& gate);

/// Per-class depolarizing parameters. A gate of class c is followed by the
/// channel rho -> (1 - p_c) rho + p_c I/d on its d-dimensional support.
struct NoiseModel {
  double p_u2 = 7e-4;
  double p_u3 = 1.4e-3;
  double p_cx = 2.2e-2;

  static NoiseModel noiseless() { return {0.0, 0.0, 0.0}; }
  double depolarizing(GateClass c) const;
  void validate() const;
};

/// One stochastic trajectory from |0...0>. After each gate a uniformly random
/// non-identity Pauli on the gate's qubits (3 or 15 choices) is inserted with
/// probability p (d^2 - 1) / d^2, which averages to the depolarizing channel.
StateVector noisy_trajectory(const Circuit& circuit, std::span<const double> params,
                             const NoiseModel& noise, std::uint64_t seed);

/// Counts from `shots` measurements spread evenly over `trajectories`
/// independent trajectories (seeds derived from `seed`).
ShotCounts sample_noisy(const Circuit& circuit, std::span<const double> params,
                        const NoiseModel& noise, std::uint64_t shots,
                        std::uint64_t trajectories, std::uint64_t seed);

struct FidelityExperimentConfig {
  std::size_t trials = 10;
  std::uint64_t shots = 10000;
  std::uint64_t trajectories = 500;
  NoiseModel noise;
  double theta_low = -0.2;
  double theta_high = 0.2;
  std::uint64_t seed = 7;
};

struct AnsatzFidelity {
  std::string ansatz;
  ResourceCount resources;
  std::vector<double> fidelities;
  double mean = 0.0;
  double stddev = 0.0;
};

struct FidelityReport {
  std::vector<std::size_t> modal_counts;
  FidelityExperimentConfig config;
  std::vector<AnsatzFidelity> results;  // UVCC then CHC
};

/// Per trial: draw one parameter vector, sample the noise-free UVCC state as
/// the reference, then score noisy UVCC and noisy CHC runs with the same
/// parameters by `distribution_fidelity` against it.
FidelityReport run_fidelity_experiment(const QubitLayout& layout,
                                       const FidelityExperimentConfig& config);

}  // namespace vibriq
