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
#include "vibriq/ansatz.hpp"
#include "vibriq/io.hpp"

using namespace vibriq;

TEST_CASE("Pauli sum JSON round trip", "[io]") {
  const auto s = PauliSum::from_label("XIYZ", Complex(0.5, -0.25)) + PauliSum::from_label("IIII", 2.0);
  const Json j = to_json(s);
  CHECK(j[0]["label"] == "IIII");
  CHECK(j[1]["label"] == "XIYZ");
  CHECK(j[1]["im"] == -0.25);
  CHECK(pauli_sum_from_json(j) == s);
  CHECK_THROWS(pauli_sum_from_json(Json::parse(R"([{"label":"XI","re":1},{"label":"X","re":1}])")));
}

TEST_CASE("PES JSON", "[io]") {
  const auto pes = load_pes(std::string(VIBRIQ_DATA_DIR) + "/coupled_2mode.json");
  CHECK(pes.num_modes() == 2);
  CHECK(pes.frequencies[1] == 300.0);
  REQUIRE(pes.terms.size() == 8);
  CHECK(pes.terms[4].powers == std::map<std::size_t, int>{{0, 1}, {1, 1}});
  const auto again = pes_from_json(to_json(pes));
  CHECK(again.terms.size() == pes.terms.size());
  CHECK(again.terms[5].coeff == pes.terms[5].coeff);

  CHECK_THROWS_AS(load_pes("/nonexistent/pes.json"), std::runtime_error);
  CHECK_THROWS(pes_from_json(Json::parse(R"({"frequencies":[1000],"units":"hartree"})")));
  CHECK_THROWS(pes_from_json(Json::parse(R"({"num_modes":2,"frequencies":[1000]})")));
  CHECK_THROWS(pes_from_json(Json::parse(R"({"frequencies":[1000],"terms":[{"coeff":1,"powers":{"x":1}}]})")));
}

TEST_CASE("circuit and resource JSON", "[io]") {
  const auto layout = QubitLayout::uniform(2, 2);
  const auto c = build_chc(layout, excitation_list(layout));
  const Json j = to_json(c);
  CHECK(j[0]["kind"] == "x");
  CHECK(!j[0].contains("angle"));
  CHECK(circuit_from_json(j, c.num_qubits(), c.num_parameters()) == c);
  const Json r = to_json(count_resources(c));
  CHECK(r == Json::parse(R"({"cx":10,"params":3,"qubits":4})"));
}

TEST_CASE("second-quantized terms JSON", "[io]") {
  const std::vector<SqTerm> terms{{1.5, {{0, 1, 0}, {1, 0, 0}}}, {2.0, {}}};
  const Json j = to_json(terms);
  CHECK(j[0]["factors"] == Json::parse("[[0,1,0],[1,0,0]]"));
  CHECK(j[1]["factors"].empty());
  CHECK(dump(Json{{"a", 1}}) == "{\n  \"a\": 1\n}\n");
}
