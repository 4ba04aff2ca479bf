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


#include "vibriq/vqe.hpp"

#include <stdexcept>
#include <string>

#include "vibriq/ansatz.hpp"
#include "vibriq/random.hpp"
#include "vibriq/statevector.hpp"

namespace vibriq {

std::string_view ansatz_name(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::Uvccsd: return "uvccsd";
    case AnsatzKind::Chc: return "chc";
    case AnsatzKind::SwapRz: return "swaprz";
    case AnsatzKind::Ryrz: return "ryrz";
  }
  return "";
}

AnsatzKind ansatz_from_name(std::string_view name) {
  for (auto k : {AnsatzKind::Uvccsd, AnsatzKind::Chc, AnsatzKind::SwapRz, AnsatzKind::Ryrz}) {
    if (ansatz_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown ansatz '" + std::string(name) + "'");
}

bool conserves_occupation(AnsatzKind kind) { return kind == AnsatzKind::Uvccsd; }

Circuit build_ansatz(AnsatzKind kind, const QubitLayout& layout, int depth, int trotter_steps) {
  switch (kind) {
    case AnsatzKind::Uvccsd:
      return build_uvcc(layout, excitation_list(layout), trotter_steps);
    case AnsatzKind::Chc:
      return build_chc(layout, excitation_list(layout));
    case AnsatzKind::SwapRz:
      return with_reference(layout, build_heuristic(HeuristicKind::SwapRZ, layout.num_qubits(), depth));
    case AnsatzKind::Ryrz:
      return with_reference(layout, build_heuristic(HeuristicKind::RYRZ, layout.num_qubits(), depth));
  }
  throw std::invalid_argument("build_ansatz: unknown ansatz");
}

double VqeConfig::resolved_mu() const {
  if (mu) return *mu;
  return conserves_occupation(ansatz) ? 0.0 : kDefaultPenalty;
}

void VqeConfig::validate() const {
  if (!(optimizer.tolerance > 0.0)) throw std::invalid_argument("vqe: tolerance must be > 0");
  if (!(init_low <= init_high)) throw std::invalid_argument("vqe: initial range bounds are not ordered");
  if (resolved_mu() < 0.0) throw std::invalid_argument("vqe: penalty weight must be >= 0");
  if (depth < 1) throw std::invalid_argument("vqe: depth must be >= 1");
  if (trotter_steps < 1) throw std::invalid_argument("vqe: trotter steps must be >= 1");
}

VqeResult ground_state(const PauliSum& hamiltonian, const QubitLayout& layout,
                       const VqeConfig& config) {
  config.validate();
  if (hamiltonian.num_qubits() != layout.num_qubits()) {
    throw std::invalid_argument("vqe: Hamiltonian acts on " + std::to_string(hamiltonian.num_qubits()) +
                                " qubits, layout has " + std::to_string(layout.num_qubits()));
  }
  const Circuit circuit = build_ansatz(config.ansatz, layout, config.depth, config.trotter_steps);
  const double mu = config.resolved_mu();
  std::vector<PauliSum> numbers;
  for (std::size_t l = 0; l < layout.num_modes(); ++l) numbers.push_back(number_operator(layout, l));

  std::vector<double> start;
  if (config.initial_parameters) {
    start = *config.initial_parameters;
    if (start.size() != circuit.num_parameters()) {
      throw std::invalid_argument("vqe: expected " + std::to_string(circuit.num_parameters()) +
                                  " initial parameters, got " + std::to_string(start.size()));
    }
  } else {
    Rng rng(derive_seed(config.seed, 0));
    start.resize(circuit.num_parameters());
    for (auto& t : start) t = rng.uniform(config.init_low, config.init_high);
  }

  auto occupations = [&](const StateVector& s) {
    std::vector<double> n;
    for (const auto& op : numbers) n.push_back(expectation(s, op));
    return n;
  };
  const Objective objective = [&](std::span<const double> theta) {
    const StateVector s = run_circuit(circuit, theta);
    const double e = expectation(s, hamiltonian);
    if (mu == 0.0) return e;
    return penalty_objective(e, occupations(s), mu);
  };

  OptimizerOptions opt = config.optimizer;
  opt.seed = derive_seed(config.seed, 1);
  OptimizationResult best = minimize(objective, start, opt);

  const StateVector final_state = run_circuit(circuit, best.params);
  VqeResult r;
  r.energy = expectation(final_state, hamiltonian);
  r.objective = best.value;
  r.mu = mu;
  r.params = std::move(best.params);
  r.initial_params = std::move(start);
  r.history = std::move(best.history);
  r.evaluations = best.evaluations;
  r.converged = best.converged;
  r.seed = config.seed;
  r.occupations = occupations(final_state);
  r.resources = count_resources(circuit);
  return r;
}

}  // namespace vibriq
