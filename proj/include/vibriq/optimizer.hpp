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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace vibriq {

enum class OptimizerKind { NelderMead, Spsa };

std::string_view optimizer_name(OptimizerKind kind);
OptimizerKind optimizer_from_name(std::string_view name);

struct OptimizerOptions {
  OptimizerKind kind = OptimizerKind::NelderMead;
  std::size_t max_evaluations = 200000;
  /// Converged once the best value moved by at most `tolerance` over the last
  /// `window` evaluations and the simplex values agree within `tolerance`.
  double tolerance = 1e-8;
  std::size_t window = 50;
  double initial_step = 0.1;
  std::size_t max_restarts = 50;
  std::uint64_t seed = 0;  // SPSA perturbations
};

using Objective = std::function<double(std::span<const double>)>;

struct OptimizationResult {
  std::vector<double> params;
  double value = 0.0;
  /// Accepted objective values, one per optimizer iteration. Non-increasing
  /// for Nelder-Mead.
  std::vector<double> history;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Minimizes `objective` from `start`. Throws std::runtime_error on a
/// non-finite objective value.
OptimizationResult minimize(const Objective& objective, std::vector<double> start,
                            const OptimizerOptions& options);

}  // namespace vibriq
