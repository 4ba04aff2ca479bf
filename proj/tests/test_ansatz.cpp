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


#include <cmath>
#include <numbers>
#include <random>

#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "vibriq/ansatz.hpp"
#include "vibriq/statevector.hpp"

using namespace vibriq;
using Catch::Matchers::WithinAbs;

namespace {

std::uint64_t reference_index(const QubitLayout& layout) {
  std::uint64_t idx = 0;
  for (std::size_t l = 0; l < layout.num_modes(); ++l) idx |= std::uint64_t{1} << layout.qubit(l, 0);
  return idx;
}

// exp(theta (T - T^+)) |ref> through the eigendecomposition of i (T - T^+).
Eigen::VectorXcd exact_exponential(const Excitation& e, const QubitLayout& layout, double theta) {
  const std::size_t n = layout.num_qubits();
  const auto t = oracle::dense(excitation_operator(e, n));
  const Eigen::MatrixXcd g = t - t.adjoint();
  const Eigen::MatrixXcd h = Complex(0, 1) * g;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXcd phases = (Complex(0, -theta) * es.eigenvalues().cast<Complex>()).array().exp();
  const Eigen::MatrixXcd u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return u * oracle::basis_vector(n, reference_index(layout));
}

double overlap(const StateVector& s, const Eigen::VectorXcd& v) {
  Complex o = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) o += std::conj(v(static_cast<Eigen::Index>(i))) * s[i];
  return std::norm(o);
}

}  // namespace

TEST_CASE("excitation list sizes and order", "[ansatz]") {
  CHECK(excitation_list(QubitLayout::uniform(4, 2)).size() == 10);
  CHECK(excitation_list(QubitLayout::uniform(2, 2)).size() == 3);
  CHECK(excitation_list(QubitLayout::uniform(6, 10)).size() == 1269);
  const auto ex = excitation_list(QubitLayout({3, 2}));
  REQUIRE(ex.size() == 5);
  CHECK(ex[0].order == 1);
  CHECK(ex[0].virtuals == std::vector<std::size_t>{1});
  CHECK(ex[1].virtuals == std::vector<std::size_t>{2});
  CHECK(ex[2].modes == std::vector<std::size_t>{1});
  CHECK(ex[3].order == 2);
  CHECK(ex[3].qubits() == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(excitation_list(QubitLayout({3, 2}), 1).size() == 3);
}

TEST_CASE("reference state", "[ansatz]") {
  const auto layout = QubitLayout::uniform(2, 2);
  const auto c = reference_circuit(layout);
  CHECK(c.gates().size() == 2);
  CHECK(c.gates()[0].qubits[0] == 0);
  CHECK(c.gates()[1].qubits[0] == 2);
  const auto s = run_circuit(c, {});
  CHECK(std::abs(s[0b0101] - 1.0) < 1e-15);
  for (std::size_t l = 0; l < 2; ++l) CHECK_THAT(expectation(s, number_operator(layout, l)), WithinAbs(1.0, 1e-15));
  CHECK(reference_circuit(QubitLayout::uniform(7, 3)).gates().size() == 7);
}

TEST_CASE("resource closed forms", "[ansatz]") {
  for (std::size_t modes : {2, 3, 4}) {
    for (std::size_t modals : {2, 3, 4}) {
      const auto layout = QubitLayout::uniform(modes, modals);
      const auto ex = excitation_list(layout);
      std::size_t s = 0;
      std::size_t d = 0;
      for (const auto& e : ex) (e.order == 1 ? s : d)++;
      const auto uvcc = count_resources(build_uvcc(layout, ex));
      const auto chc = count_resources(build_chc(layout, ex));
      CHECK(uvcc.cnot_count == 4 * s + 48 * d);
      CHECK(chc.cnot_count == 2 * s + 6 * d);
      CHECK(uvcc.parameter_count == s + d);
      CHECK(chc.parameter_count == s + d);
      CHECK(uvcc.qubit_count == modes * modals);
    }
  }
  const auto l22 = QubitLayout::uniform(2, 2);
  CHECK(count_resources(build_uvcc(l22, excitation_list(l22), 2)).cnot_count == 112);
}

TEST_CASE("heuristic ansatz counts", "[ansatz]") {
  for (int d = 1; d <= 3; ++d) {
    const auto r = count_resources(build_heuristic(HeuristicKind::SwapRZ, 4, d));
    CHECK(r.cnot_count == static_cast<std::size_t>(24 * d));
    CHECK(r.parameter_count == static_cast<std::size_t>(4 * (d + 1) + 6 * d));
    const auto y = count_resources(build_heuristic(HeuristicKind::RYRZ, 4, d));
    CHECK(y.parameter_count == static_cast<std::size_t>(8 * (d + 1)));
    CHECK(y.cnot_count == static_cast<std::size_t>(6 * d));
  }
  CHECK_THROWS_AS(build_heuristic(HeuristicKind::SwapRZ, 4, 0), std::invalid_argument);
}

TEST_CASE("zero parameters leave the reference unchanged", "[ansatz]") {
  const auto layout = QubitLayout({2, 3});
  const auto ex = excitation_list(layout);
  const std::vector<double> zeros(ex.size(), 0.0);
  for (bool chc : {false, true}) {
    const auto s = run_circuit(chc ? build_chc(layout, ex) : build_uvcc(layout, ex), zeros);
    CHECK_THAT(std::norm(s[reference_index(layout)]), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("UVCC gadgets reproduce the exact exponential and conserve occupation", "[ansatz]") {
  const auto layout = QubitLayout({2, 3});
  const auto ex = excitation_list(layout);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (const auto& e : ex) {
    const double theta = angle(rng);
    const auto s = run_circuit(build_uvcc(layout, std::vector<Excitation>{e}), std::vector<double>{theta});
    CHECK(overlap(s, exact_exponential(e, layout, theta)) > 1.0 - 1e-10);
  }
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> theta(ex.size());
    for (auto& t : theta) t = angle(rng);
    const auto s = run_circuit(build_uvcc(layout, ex), theta);
    CHECK_THAT(s.norm_squared(), WithinAbs(1.0, 1e-12));
    for (std::size_t l = 0; l < layout.num_modes(); ++l) {
      CHECK_THAT(expectation(s, number_operator(layout, l)), WithinAbs(1.0, 1e-10));
    }
  }
}

TEST_CASE("CHC blocks act as the UVCC exponential on the reference", "[ansatz]") {
  const auto layout = QubitLayout({2, 3, 2});
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (const auto& e : excitation_list(layout)) {
    const auto circuit = build_chc(layout, std::vector<Excitation>{e});
    CHECK(count_resources(circuit).cnot_count == (e.order == 1 ? 2u : 6u));
    for (int k = 0; k < 5; ++k) {
      const double theta = k == 0 ? std::numbers::pi / 4 : angle(rng);
      const auto s = run_circuit(circuit, std::vector<double>{theta});
      CHECK(overlap(s, exact_exponential(e, layout, theta)) > 1.0 - 1e-10);
    }
  }
  // pi/4 on a single: equal weight on the reference and the excited configuration.
  const auto l = QubitLayout::uniform(1, 2);
  const auto s = run_circuit(build_chc(l, excitation_list(l)), std::vector<double>{std::numbers::pi / 4});
  CHECK_THAT(s[0b01].real(), WithinAbs(std::sqrt(0.5), 1e-12));
  CHECK_THAT(s[0b10].real(), WithinAbs(std::sqrt(0.5), 1e-12));
}

TEST_CASE("SwapRZ conserves total occupation", "[ansatz]") {
  const auto layout = QubitLayout::uniform(2, 2);
  const auto c = with_reference(layout, build_heuristic(HeuristicKind::SwapRZ, 4, 2));
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<double> theta(c.num_parameters());
  for (auto& t : theta) t = angle(rng);
  const auto s = run_circuit(c, theta);
  const double total = expectation(s, number_operator(layout, 0) + number_operator(layout, 1));
  CHECK_THAT(total, WithinAbs(2.0, 1e-10));
}

TEST_CASE("Pauli rotation gadget matches the dense exponential", "[ansatz]") {
  const std::pair<std::size_t, Pauli> letters[] = {{0, Pauli::Y}, {1, Pauli::X}, {3, Pauli::Z}};
  Circuit c(4, 1);
  append_pauli_rotation(c, letters, 0, 0.7);
  const double theta = 0.3;
  const double a = 0.7 * theta;
  const auto p = oracle::dense(PauliSum::from_label("YXIZ"));
  const Eigen::MatrixXcd expected =
      std::cos(a) * Eigen::MatrixXcd::Identity(16, 16) + Complex(0, std::sin(a)) * p;
  const std::vector<double> params{theta};
  CHECK((oracle::circuit_unitary(c, params) - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(count_resources(c).cnot_count == 4);
}
