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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "vibriq/ansatz.hpp"
#include "vibriq/pauli.hpp"
#include "vibriq/statevector.hpp"

namespace vibriq {

/// Excitation operators E_mu (products a^+_virt a_occ) and their adjoints.
struct EomOperators {
  std::vector<Excitation> excitations;
  std::vector<PauliSum> ops;
  std::vector<PauliSum> adjoints;
  std::size_t size() const { return ops.size(); }
};

EomOperators build_eom_operators(const QubitLayout& layout, int max_order = 2);

/// (1/2)([[a, h], b] + [a, [h, b]]).
PauliSum double_commutator(const PauliSum& a, const PauliSum& h, const PauliSum& b);

/// M = <[E_mu^+, H, E_nu]>, Q = -<[E_mu^+, H, E_nu^+]>,
/// V = <[E_mu^+, E_nu]>, W = -<[E_mu^+, E_nu^+]>.
struct EomMatrices {
  Eigen::MatrixXcd m;
  Eigen::MatrixXcd q;
  Eigen::MatrixXcd v;
  Eigen::MatrixXcd w;
};

EomMatrices compute_matrices(const StateVector& ground, const PauliSum& h, const EomOperators& ops);

inline constexpr double kDefaultEomThreshold = 1e-6;
inline constexpr double kDefaultMetricTolerance = 1e-10;

struct QeomResult {
  std::vector<double> energies;  // positive excitation energies, ascending
  std::vector<std::complex<double>> eigenvalues;  // full 2n spectrum, by real part
  std::size_t pool_size = 0;
  std::size_t filtered_count = 0;  // eigenvalues discarded by the filter
};

/// Solves [[M, Q], [Q*, M*]] z = E [[V, W], [-W*, -V*]] z and keeps the
/// eigenvalues whose real part exceeds `threshold`. Throws when the metric
/// has singular values below `metric_tolerance` times the largest one.
QeomResult solve_pseudo_eigenproblem(const EomMatrices& m,
                                     double threshold = kDefaultEomThreshold,
                                     double metric_tolerance = kDefaultMetricTolerance);

/// Operators, matrices and energies in one call.
QeomResult excited_states(const StateVector& ground, const PauliSum& h, const QubitLayout& layout,
                          double threshold = kDefaultEomThreshold);

}  // namespace vibriq
