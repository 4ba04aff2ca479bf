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
#include <vector>

#include <Eigen/Dense>

#include "vibriq/pauli.hpp"
#include "vibriq/second_quantization.hpp"
#include "vibriq/statevector.hpp"

namespace vibriq {

inline constexpr std::size_t kMaxDenseQubits = 14;

/// Full 2^N x 2^N matrix; row/column index bit q is qubit q.
Eigen::MatrixXcd dense_matrix(const PauliSum& op);

/// Basis states with exactly one set bit per mode register, ascending.
struct PhysicalProjector {
  QubitLayout layout;
  std::vector<std::uint64_t> indices;

  explicit PhysicalProjector(QubitLayout layout);
  std::size_t dimension() const { return indices.size(); }
  /// Rows and columns of `full` restricted to the physical indices.
  Eigen::MatrixXcd project(const Eigen::MatrixXcd& full) const;
  /// Embeds a physical-subspace vector into the full register.
  StateVector embed(const Eigen::VectorXcd& v) const;
};

/// Ascending eigenvalues of `h` inside the physical subspace.
std::vector<double> physical_spectrum(const PauliSum& h, const QubitLayout& layout);

/// Lowest physical eigenvector as a full-register state, phase fixed so the
/// largest-magnitude amplitude is real and positive.
StateVector physical_ground_state(const PauliSum& h, const QubitLayout& layout);

}  // namespace vibriq
