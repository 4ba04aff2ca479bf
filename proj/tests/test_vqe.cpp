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


#include <algorithm>

#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "vibriq/exact.hpp"
#include "vibriq/vqe.hpp"

using namespace vibriq;
using Catch::Matchers::WithinAbs;

namespace {

VibrationalHamiltonian synthetic() {
  const std::size_t counts[] = {2, 2};
  return build_vibrational_hamiltonian(oracle::synthetic_pes(2024, {200.0, 300.0}), counts);
}

double oracle_ground(const VibrationalHamiltonian& h) {
  // Independent: ONV-rule matrix of the second-quantized terms.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::onv_matrix(h.terms, h.layout));
  return es.eigenvalues()(0);
}

}  // namespace

TEST_CASE("UVCC reference is exact for uncoupled harmonic modes", "[vqe]") {
  PesExpansion pes;
  pes.frequencies = {1000.0, 1500.0};
  const std::size_t counts[] = {2, 2};
  const auto h = build_vibrational_hamiltonian(pes, counts);
  VqeConfig cfg;
  cfg.initial_parameters = std::vector<double>(3, 0.0);
  const auto r = ground_state(h.qubit_operator, h.layout, cfg);
  CHECK_THAT(r.energy, WithinAbs(1250.0, 1e-9));
  CHECK(std::all_of(r.history.begin(), r.history.end(), [](double e) { return std::abs(e - 1250.0) < 1e-9; }));
}

TEST_CASE("UVCC reaches the exact physical ground state", "[vqe]") {
  const auto h = synthetic();
  const double exact = oracle_ground(h);
  VqeConfig cfg;
  cfg.seed = 3;
  const auto r = ground_state(h.qubit_operator, h.layout, cfg);
  CHECK(r.energy >= exact - 1e-9);
  CHECK_THAT(r.energy, WithinAbs(exact, 1e-6));
  CHECK(r.mu == 0.0);
  CHECK(r.objective == r.history.back());
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] <= r.history[i - 1]);
  for (double n : r.occupations) CHECK_THAT(n, WithinAbs(1.0, 1e-10));
  for (double t : r.initial_params) CHECK((t >= -0.2 && t <= 0.2));
}

TEST_CASE("penalty does not change UVCC energies", "[vqe]") {
  const auto h = synthetic();
  VqeConfig a;
  a.seed = 5;
  a.optimizer.max_evaluations = 60;
  VqeConfig b = a;
  b.mu = 1e5;
  const auto ra = ground_state(h.qubit_operator, h.layout, a);
  const auto rb = ground_state(h.qubit_operator, h.layout, b);
  REQUIRE(ra.history.size() == rb.history.size());
  for (std::size_t i = 0; i < ra.history.size(); ++i) CHECK(std::abs(ra.history[i] - rb.history[i]) <= 1e-9);
}

TEST_CASE("RYRZ needs the penalty", "[vqe]") {
  const auto h = synthetic();
  const double exact = oracle_ground(h);
  VqeConfig cfg;
  cfg.ansatz = AnsatzKind::Ryrz;
  cfg.seed = 1;
  cfg.mu = 0.0;
  const auto free = ground_state(h.qubit_operator, h.layout, cfg);
  CHECK(free.energy < exact - 1.0);
  CHECK(std::abs(free.occupations[0] - 1.0) > 0.5);

  cfg.mu.reset();
  CHECK(cfg.resolved_mu() == kDefaultPenalty);
  const auto pen = ground_state(h.qubit_operator, h.layout, cfg);
  for (double n : pen.occupations) CHECK_THAT(n, WithinAbs(1.0, 1e-3));
}

TEST_CASE("VQE configuration checks", "[vqe]") {
  const auto h = synthetic();
  VqeConfig cfg;
  cfg.init_low = 1.0;
  cfg.init_high = -1.0;
  CHECK_THROWS_AS(ground_state(h.qubit_operator, h.layout, cfg), std::invalid_argument);
  cfg = VqeConfig{};
  cfg.initial_parameters = std::vector<double>{0.0};
  CHECK_THROWS_AS(ground_state(h.qubit_operator, h.layout, cfg), std::invalid_argument);
  CHECK_THROWS_AS(ground_state(h.qubit_operator, QubitLayout({2, 3}), VqeConfig{}), std::invalid_argument);
  CHECK(ansatz_from_name("swaprz") == AnsatzKind::SwapRz);
  CHECK_THROWS_AS(ansatz_from_name("hea"), std::invalid_argument);
}

TEST_CASE("VQE is deterministic for a fixed seed", "[vqe]") {
  const auto h = synthetic();
  VqeConfig cfg;
  cfg.ansatz = AnsatzKind::SwapRz;
  cfg.seed = 11;
  const auto a = ground_state(h.qubit_operator, h.layout, cfg);
  const auto b = ground_state(h.qubit_operator, h.layout, cfg);
  CHECK(a.params == b.params);
  CHECK(a.history == b.history);
}
