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

#include <span>
#include <string>

#include <json.hpp>

#include "vibriq/circuit.hpp"
#include "vibriq/noise.hpp"
#include "vibriq/pauli.hpp"
#include "vibriq/pes.hpp"
#include "vibriq/qeom.hpp"
#include "vibriq/second_quantization.hpp"
#include "vibriq/statevector.hpp"
#include "vibriq/vqe.hpp"

namespace vibriq {

using Json = nlohmann::ordered_json;

/// [{"label": "XIYZ", "re": r, "im": i}, ...], qubit 0 leftmost.
Json to_json(const PauliSum& op);
PauliSum pauli_sum_from_json(const Json& j);

/// {"num_modes", "units": "cm-1", "frequencies", "v0",
///  "terms": [{"coeff", "powers": {"0": 3}}]}.
Json to_json(const PesExpansion& pes);
PesExpansion pes_from_json(const Json& j);
/// Reads and validates a PES file. Throws std::runtime_error on I/O or
/// format problems.
PesExpansion load_pes(const std::string& path);

/// [{"coeff", "factors": [[l, k, h], ...]}, ...].
Json to_json(std::span<const SqTerm> terms);

/// [{"kind", "qubits", "param_index"?, "scale"?, "angle"?}, ...].
Json to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j, std::size_t num_qubits, std::size_t num_parameters);

/// {"cx", "params", "qubits"}.
Json to_json(const ResourceCount& r);
Json to_json(const ShotCounts& counts);
Json to_json(const OptimizerOptions& o);
Json to_json(const VqeConfig& c);
Json to_json(const VqeResult& r);
Json to_json(const QeomResult& r);
Json to_json(const NoiseModel& n);
Json to_json(const FidelityExperimentConfig& c);
Json to_json(const FidelityReport& r);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace vibriq
