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


#include "vibriq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vibriq {

Json to_json(const PauliSum& op) {
  Json out = Json::array();
  for (const auto& t : op.terms()) {
    out.push_back({{"label", t.string.label(op.num_qubits())},
                   {"re", t.coeff.real()},
                   {"im", t.coeff.imag()}});
  }
  return out;
}

PauliSum pauli_sum_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("Pauli sum JSON must be a non-empty list");
  const std::size_t n = j.front().at("label").get<std::string>().size();
  std::vector<PauliTerm> terms;
  for (const auto& rec : j) {
    const auto label = rec.at("label").get<std::string>();
    if (label.size() != n) throw std::invalid_argument("Pauli sum JSON: labels differ in length");
    terms.push_back({PauliString::from_label(label),
                     Complex(rec.at("re").get<double>(), rec.value("im", 0.0))});
  }
  return PauliSum(n, std::move(terms));
}

Json to_json(const PesExpansion& pes) {
  Json terms = Json::array();
  for (const auto& t : pes.terms) {
    Json powers = Json::object();
    for (const auto& [mode, p] : t.powers) powers[std::to_string(mode)] = p;
    terms.push_back({{"coeff", t.coeff}, {"powers", powers}});
  }
  return {{"num_modes", pes.num_modes()}, {"units", "cm-1"}, {"frequencies", pes.frequencies},
          {"v0", pes.v0}, {"terms", terms}};
}

PesExpansion pes_from_json(const Json& j) {
  PesExpansion pes;
  const auto units = j.value("units", std::string("cm-1"));
  if (units != "cm-1") throw std::invalid_argument("PES units must be \"cm-1\", got \"" + units + "\"");
  pes.frequencies = j.at("frequencies").get<std::vector<double>>();
  if (j.contains("num_modes") && j.at("num_modes").get<std::size_t>() != pes.frequencies.size()) {
    throw std::invalid_argument("PES num_modes does not match the frequency list");
  }
  pes.v0 = j.value("v0", 0.0);
  if (j.contains("max_degree")) pes.max_degree = j.at("max_degree").get<int>();
  for (const auto& rec : j.value("terms", Json::array())) {
    PesTerm t;
    t.coeff = rec.at("coeff").get<double>();
    for (const auto& [key, value] : rec.at("powers").items()) {
      std::size_t used = 0;
      const unsigned long mode = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument("PES term has a bad mode key '" + key + "'");
      t.powers[mode] = value.get<int>();
    }
    pes.terms.push_back(std::move(t));
  }
  pes.validate();
  return pes;
}

PesExpansion load_pes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open PES file '" + path + "'");
  try {
    return pes_from_json(Json::parse(in));
  } catch (const std::exception& e) {
    throw std::runtime_error("bad PES file '" + path + "': " + e.what());
  }
}

Json to_json(std::span<const SqTerm> terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back({f.mode, f.create, f.annihilate});
    out.push_back({{"coeff", t.coeff}, {"factors", factors}});
  }
  return out;
}

Json to_json(const Circuit& circuit) {
  Json out = Json::array();
  for (const auto& g : circuit.gates()) {
    Json rec = {{"kind", gate_name(g.kind)}};
    rec["qubits"] = g.arity() == 2 ? Json{g.qubits[0], g.qubits[1]} : Json{g.qubits[0]};
    if (g.parameter) {
      rec["param_index"] = *g.parameter;
      rec["scale"] = g.angle;
    } else if (is_rotation(g.kind)) {
      rec["angle"] = g.angle;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

Circuit circuit_from_json(const Json& j, std::size_t num_qubits, std::size_t num_parameters) {
  Circuit c(num_qubits, num_parameters);
  for (const auto& rec : j) {
    Gate g;
    g.kind = gate_kind_from_name(rec.at("kind").get<std::string>());
    const auto qs = rec.at("qubits").get<std::vector<std::size_t>>();
    if (qs.size() != g.arity()) throw std::invalid_argument("circuit JSON: wrong qubit count for gate");
    for (std::size_t i = 0; i < qs.size(); ++i) g.qubits[i] = qs[i];
    if (rec.contains("param_index")) {
      g.parameter = rec.at("param_index").get<std::size_t>();
      g.angle = rec.value("scale", 1.0);
    } else {
      g.angle = rec.value("angle", 0.0);
    }
    c.add(g);
  }
  return c;
}

Json to_json(const ResourceCount& r) {
  return {{"cx", r.cnot_count}, {"params", r.parameter_count}, {"qubits", r.qubit_count}};
}

Json to_json(const ShotCounts& counts) {
  Json c = Json::object();
  for (const auto& [bits, n] : counts.counts) c[bits] = n;
  return {{"num_qubits", counts.num_qubits}, {"shots", counts.shots}, {"counts", c}};
}

Json to_json(const OptimizerOptions& o) {
  return {{"kind", optimizer_name(o.kind)}, {"max_evaluations", o.max_evaluations},
          {"tolerance", o.tolerance}, {"window", o.window}, {"initial_step", o.initial_step},
          {"max_restarts", o.max_restarts}};
}

Json to_json(const VqeConfig& c) {
  return {{"ansatz", ansatz_name(c.ansatz)}, {"depth", c.depth}, {"trotter_steps", c.trotter_steps},
          {"optimizer", to_json(c.optimizer)}, {"init_range", {c.init_low, c.init_high}},
          {"mu", c.resolved_mu()}, {"seed", c.seed}};
}

Json to_json(const VqeResult& r) {
  return {{"energy", r.energy}, {"objective", r.objective}, {"mu", r.mu},
          {"params", r.params}, {"initial_params", r.initial_params}, {"history", r.history},
          {"evals", r.evaluations}, {"converged", r.converged}, {"seed", r.seed},
          {"occupations", r.occupations}, {"resources", to_json(r.resources)}};
}

Json to_json(const QeomResult& r) {
  Json eig = Json::array();
  for (const auto& e : r.eigenvalues) eig.push_back({{"re", e.real()}, {"im", e.imag()}});
  return {{"energies", r.energies}, {"pool_size", r.pool_size},
          {"filtered_count", r.filtered_count}, {"eigenvalues", eig}};
}

Json to_json(const NoiseModel& n) {
  return {{"p_u2", n.p_u2}, {"p_u3", n.p_u3}, {"p_cx", n.p_cx}};
}

Json to_json(const FidelityExperimentConfig& c) {
  return {{"trials", c.trials}, {"shots", c.shots}, {"trajectories", c.trajectories},
          {"noise", to_json(c.noise)}, {"theta_range", {c.theta_low, c.theta_high}},
          {"seed", c.seed}};
}

Json to_json(const FidelityReport& r) {
  Json results = Json::array();
  for (const auto& a : r.results) {
    results.push_back({{"ansatz", a.ansatz}, {"resources", to_json(a.resources)},
                       {"fidelities", a.fidelities}, {"mean", a.mean}, {"stddev", a.stddev}});
  }
  return {{"modals", r.modal_counts}, {"config", to_json(r.config)}, {"results", results}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vibriq
