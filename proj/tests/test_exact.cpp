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


#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "vibriq/exact.hpp"

using namespace vibriq;
using Catch::Matchers::WithinAbs;

TEST_CASE("dense matrices", "[exact]") {
  const auto z = dense_matrix(PauliSum::from_label("Z"));
  CHECK(z(0, 0) == Complex(1.0));
  CHECK(z(1, 1) == Complex(-1.0));
  const auto n = dense_matrix(PauliSum::from_label("I", 0.5) + PauliSum::from_label("Z", -0.5));
  CHECK(n(0, 0) == Complex(0.0));
  CHECK(n(1, 1) == Complex(1.0));

  const QubitLayout two({2});
  const auto hop = dense_matrix(map_to_pauli(std::vector<SqTerm>{{1.0, {{0, 1, 0}}}}, two));
  CHECK(std::abs(hop(2, 1) - 1.0) < 1e-15);
  CHECK(hop.cwiseAbs().sum() == Catch::Approx(1.0));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = oracle::random_sum(4, 10, rng, false);
    CHECK((dense_matrix(s) - oracle::dense(s)).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK_THROWS_AS(dense_matrix(PauliSum::identity(15)), std::invalid_argument);
}

TEST_CASE("physical projector", "[exact]") {
  const PhysicalProjector p(QubitLayout::uniform(4, 2));
  CHECK(p.dimension() == 16);
  const PhysicalProjector q(QubitLayout({2, 3}));
  CHECK(q.indices == oracle::physical_indices(QubitLayout({2, 3})));
  std::mt19937_64 rng(42);
  const auto m = oracle::dense(oracle::random_sum(5, 6, rng, true));
  const auto once = q.project(m);
  const PhysicalProjector same(QubitLayout({2, 3}));
  CHECK(same.project(m) == once);
  // Projecting the embedded block again is idempotent.
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(32, 32);
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = 0; j < q.dimension(); ++j)
      full(static_cast<Eigen::Index>(q.indices[i]), static_cast<Eigen::Index>(q.indices[j])) = once(i, j);
  CHECK(q.project(full) == once);
}

TEST_CASE("harmonic spectrum", "[exact]") {
  PesExpansion pes;
  pes.frequencies = {1000.0, 1500.0};
  const std::size_t counts[] = {2, 2};
  const auto h = build_vibrational_hamiltonian(pes, counts);
  const auto spec = physical_spectrum(h.qubit_operator, h.layout);
  REQUIRE(spec.size() == 4);
  const double expected[] = {1250.0, 2250.0, 2750.0, 3750.0};
  for (int k = 0; k < 4; ++k) CHECK_THAT(spec[k], WithinAbs(expected[k], 1e-9));
  const auto g = physical_ground_state(h.qubit_operator, h.layout);
  CHECK_THAT(std::norm(g[0b0101]), WithinAbs(1.0, 1e-12));
}

TEST_CASE("penalty operator leaves the physical spectrum unchanged", "[exact]") {
  const std::size_t counts[] = {2, 2};
  const auto h = build_vibrational_hamiltonian(oracle::synthetic_pes(2024, {200.0, 300.0}), counts);
  const auto a = physical_spectrum(h.qubit_operator, h.layout);
  const auto b = physical_spectrum(h.qubit_operator + penalty_operator(h.layout, 1e5), h.layout);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK_THAT(b[k], WithinAbs(a[k], 1e-8));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::onv_matrix(h.terms, h.layout));
  for (std::size_t k = 0; k < a.size(); ++k) CHECK_THAT(a[k], WithinAbs(es.eigenvalues()(k), 1e-9));
  CHECK_THROWS_AS(physical_spectrum(PauliSum::from_label("XIII", Complex(0, 1)), h.layout), std::invalid_argument);
}
