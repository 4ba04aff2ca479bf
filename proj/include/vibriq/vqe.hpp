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
#include <optional>
#include <string_view>
#include <vector>

#include "vibriq/circuit.hpp"
#include "vibriq/optimizer.hpp"
#include "vibriq/pauli.hpp"
#include "vibriq/second_quantization.hpp"

namespace vibriq {

enum class AnsatzKind { Uvccsd, Chc, SwapRz, Ryrz };

std::string_view ansatz_name(AnsatzKind kind);
AnsatzKind ansatz_from_name(std::string_view name);

/// Only UVCC keeps every mode singly occupied for all parameters.
bool conserves_occupation(AnsatzKind kind);

/// Full circuit including the reference state. `depth` applies to the
/// heuristic ansaetze, `trotter_steps` to UVCC.
Circuit build_ansatz(AnsatzKind kind, const QubitLayout& layout, int depth = 1,
                     int trotter_steps = 1);

inline constexpr double kDefaultPenalty = 1e5;

struct VqeConfig {
  AnsatzKind ansatz = AnsatzKind::Uvccsd;
  int depth = 1;
  int trotter_steps = 1;
  OptimizerOptions optimizer;
  double init_low = -0.2;
  double init_high = 0.2;
  /// Unset: kDefaultPenalty for non-conserving ansaetze, 0 for UVCC.
  std::optional<double> mu;
  std::uint64_t seed = 0;
  /// Overrides the random start when set.
  std::optional<std::vector<double>> initial_parameters;

  double resolved_mu() const;
  void validate() const;
};

struct VqeResult {
  double energy = 0.0;     // <H> at the optimal parameters
  double objective = 0.0;  // energy plus penalty, equals history.back()
  double mu = 0.0;
  std::vector<double> params;
  std::vector<double> initial_params;
  std::vector<double> history;
  std::size_t evaluations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  std::vector<double> occupations;  // <N_l> per mode
  ResourceCount resources;
};

/// Noise-free VQE: minimizes <H> + mu sum_l (<N_l> - 1)^2 over the ansatz
/// parameters with exact statevector expectations.
VqeResult ground_state(const PauliSum& hamiltonian, const QubitLayout& layout,
                       const VqeConfig& config);

}  // namespace vibriq
