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


#include "vibriq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vibriq/ansatz.hpp"
#include "vibriq/exact.hpp"
#include "vibriq/io.hpp"
#include "vibriq/noise.hpp"
#include "vibriq/qeom.hpp"
#include "vibriq/vqe.hpp"

namespace vibriq {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error("stage '" + stage + "' failed: " + what) {}
};

template <class F>
auto stage(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::vector<std::size_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) {
      throw ConfigError(flag + ": expected positive integers separated by commas, got '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(flag + ": empty list");
  return out;
}

struct HamiltonianOptions {
  std::string pes_path;
  std::string modals = "2";
  int primitive_dim = static_cast<int>(kDefaultPrimitiveDim);
  std::size_t n_body = kDefaultBodyOrder;

  void add_to(CLI::App& app) {
    app.add_option("--pes", pes_path, "PES JSON file")->required()->check(CLI::ExistingFile);
    app.add_option("--modals", modals, "modals per mode: N or N1,N2,...")->capture_default_str();
    app.add_option("--primitive-dim", primitive_dim, "harmonic-oscillator primitives per mode")
        ->capture_default_str()
        ->check(CLI::Range(1, 400));
    app.add_option("--n-body", n_body, "coupling truncation order")
        ->capture_default_str()
        ->check(CLI::Range(1, 8));
  }

  Json echo(const std::vector<std::size_t>& counts) const {
    return {{"pes", pes_path}, {"modals", counts}, {"primitive_dim", primitive_dim}, {"n_body", n_body}};
  }

  std::pair<VibrationalHamiltonian, Json> build() const {
    const PesExpansion pes = stage("load-pes", [&] { return load_pes(pes_path); });
    std::vector<std::size_t> counts = parse_list(modals, "--modals");
    if (counts.size() == 1) counts.assign(pes.num_modes(), counts.front());
    if (counts.size() != pes.num_modes()) {
      throw ConfigError("--modals lists " + std::to_string(counts.size()) + " modes, PES has " +
                        std::to_string(pes.num_modes()));
    }
    auto h = stage("build-hamiltonian", [&] {
      return build_vibrational_hamiltonian(pes, counts, primitive_dim, n_body);
    });
    return {std::move(h), echo(counts)};
  }
};

struct VqeOptions {
  std::string ansatz = "uvccsd";
  int depth = 1;
  int trotter = 1;
  std::optional<double> mu;
  std::uint64_t seed = 0;
  std::string optimizer = "nelder-mead";
  std::size_t max_evals = OptimizerOptions{}.max_evaluations;
  double tolerance = OptimizerOptions{}.tolerance;
  std::string init = "random";

  void add_to(CLI::App& app) {
    app.add_option("--ansatz", ansatz, "uvccsd, chc, swaprz or ryrz")
        ->capture_default_str()
        ->check(CLI::IsMember({"uvccsd", "chc", "swaprz", "ryrz"}));
    app.add_option("--depth", depth, "heuristic ansatz depth")->capture_default_str()->check(CLI::Range(1, 1000));
    app.add_option("--trotter", trotter, "UVCC Trotter steps")->capture_default_str()->check(CLI::Range(1, 1000));
    app.add_option("--mu", mu, "penalty weight (default 1e5 unless the ansatz is UVCC)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--optimizer", optimizer, "nelder-mead or spsa")
        ->capture_default_str()
        ->check(CLI::IsMember({"nelder-mead", "spsa"}));
    app.add_option("--max-evals", max_evals, "objective evaluation budget")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", tolerance, "convergence tolerance (cm^-1)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--init", init, "random (uniform in [-0.2, 0.2]) or zero")
        ->capture_default_str()
        ->check(CLI::IsMember({"random", "zero"}));
  }

  VqeConfig config(const QubitLayout& layout) const {
    VqeConfig c;
    c.ansatz = ansatz_from_name(ansatz);
    c.depth = depth;
    c.trotter_steps = trotter;
    c.optimizer.kind = optimizer_from_name(optimizer);
    c.optimizer.max_evaluations = max_evals;
    c.optimizer.tolerance = tolerance;
    c.mu = mu;
    c.seed = seed;
    if (init == "zero") {
      const Circuit circuit = build_ansatz(c.ansatz, layout, depth, trotter);
      c.initial_parameters = std::vector<double>(circuit.num_parameters(), 0.0);
    }
    return c;
  }

  Json echo(const VqeConfig& c) const {
    Json j = to_json(c);
    j["init"] = init;
    return j;
  }
};

struct Output {
  std::string path;
  std::string format = "json";

  void add_to(CLI::App& app, bool csv) {
    app.add_option("--out", path, "output file (default: stdout)");
    auto* opt = app.add_option("--format", format, csv ? "json or csv" : "json")->capture_default_str();
    if (csv) {
      opt->check(CLI::IsMember({"json", "csv"}));
    } else {
      opt->check(CLI::IsMember({"json"}));
    }
  }

  void write(const std::string& text, std::ostream& out) const {
    stage("write-output", [&] {
      if (path.empty()) {
        out << text;
        return 0;
      }
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
      f << text;
      if (!f) throw std::runtime_error("write to '" + path + "' failed");
      return 0;
    });
  }
};

Json envelope(const char* command, Json config, Json result) {
  return {{"command", command}, {"config", std::move(config)}, {"result", std::move(result)}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vibrational structure on a simulated quantum computer", "vibriq"};
  app.require_subcommand(1);

  // resources
  auto* resources = app.add_subcommand("resources", "CNOT, parameter and qubit counts per ansatz");
  std::string res_modes;
  std::string res_modals = "2";
  std::string res_ansatz = "all";
  int res_depth = 1;
  Output res_out;
  resources->add_option("--modes", res_modes,
                        "mode counts (list): tabulate uniform layouts for every mode/modal pair");
  resources->add_option("--modals", res_modals, "modals per mode: N or N1,N2,...")->capture_default_str();
  resources->add_option("--ansatz", res_ansatz, "uvccsd, chc, swaprz, ryrz or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"uvccsd", "chc", "swaprz", "ryrz", "all"}));
  resources->add_option("--depth", res_depth, "heuristic ansatz depth")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  res_out.add_to(*resources, true);

  // vqe
  auto* vqe = app.add_subcommand("vqe", "ground-state VQE");
  HamiltonianOptions vqe_h;
  VqeOptions vqe_o;
  Output vqe_out;
  vqe_h.add_to(*vqe);
  vqe_o.add_to(*vqe);
  vqe_out.add_to(*vqe, false);

  // qeom
  auto* qeom = app.add_subcommand("qeom", "excitation energies by the equation-of-motion method");
  HamiltonianOptions qeom_h;
  VqeOptions qeom_o;
  Output qeom_out;
  std::string qeom_ground = "vqe";
  double qeom_threshold = kDefaultEomThreshold;
  qeom_h.add_to(*qeom);
  qeom_o.add_to(*qeom);
  qeom_out.add_to(*qeom, false);
  qeom->add_option("--ground", qeom_ground, "ground state source: vqe or exact")
      ->capture_default_str()
      ->check(CLI::IsMember({"vqe", "exact"}));
  qeom->add_option("--threshold", qeom_threshold, "smallest excitation energy kept (cm^-1)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  // noise-fidelity
  auto* noise = app.add_subcommand("noise-fidelity", "UVCC vs CHC distribution fidelity under noise");
  std::string noise_modals = "2,2";
  FidelityExperimentConfig noise_cfg;
  Output noise_out;
  noise->add_option("--modals", noise_modals, "modals per mode")->capture_default_str();
  noise->add_option("--trials", noise_cfg.trials, "parameter draws")->capture_default_str()->check(CLI::PositiveNumber);
  noise->add_option("--shots", noise_cfg.shots, "shots per run")->capture_default_str()->check(CLI::PositiveNumber);
  noise->add_option("--trajectories", noise_cfg.trajectories, "noise trajectories per run")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  noise->add_option("--seed", noise_cfg.seed, "master seed")->capture_default_str();
  noise->add_option("--p-u2", noise_cfg.noise.p_u2, "U2-class depolarizing rate")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  noise->add_option("--p-u3", noise_cfg.noise.p_u3, "U3-class depolarizing rate")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  noise->add_option("--p-cx", noise_cfg.noise.p_cx, "CNOT depolarizing rate")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  noise_out.add_to(*noise, false);

  // exact
  auto* exact = app.add_subcommand("exact", "physical-subspace spectrum by dense diagonalization");
  HamiltonianOptions exact_h;
  Output exact_out;
  exact_h.add_to(*exact);
  exact_out.add_to(*exact, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (resources->parsed()) {
      std::vector<AnsatzKind> kinds;
      if (res_ansatz == "all") {
        kinds = {AnsatzKind::Uvccsd, AnsatzKind::Chc, AnsatzKind::SwapRz, AnsatzKind::Ryrz};
      } else {
        kinds = {ansatz_from_name(res_ansatz)};
      }
      std::vector<std::vector<std::size_t>> layouts;
      const auto modal_list = parse_list(res_modals, "--modals");
      if (res_modes.empty()) {
        layouts.push_back(modal_list);
      } else {
        for (std::size_t m : parse_list(res_modes, "--modes")) {
          for (std::size_t n : modal_list) layouts.emplace_back(m, n);
        }
      }
      Json rows = Json::array();
      std::ostringstream csv;
      csv << "ansatz,modes,modals,qubits,cx,params\n";
      for (const auto& counts : layouts) {
        const QubitLayout layout(counts);
        for (AnsatzKind k : kinds) {
          const ResourceCount r =
              stage("build-circuit", [&] { return count_resources(build_ansatz(k, layout, res_depth)); });
          Json row = {{"ansatz", ansatz_name(k)}, {"modes", counts.size()}, {"modals", counts}};
          const Json counted = to_json(r);
          for (const auto& [key, value] : counted.items()) row[key] = value;
          rows.push_back(std::move(row));
          std::string modal_text;
          for (std::size_t i = 0; i < counts.size(); ++i) {
            modal_text += (i ? "-" : "") + std::to_string(counts[i]);
          }
          if (std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == counts[0]; })) {
            modal_text = std::to_string(counts[0]);
          }
          csv << ansatz_name(k) << ',' << counts.size() << ',' << modal_text << ','
              << r.qubit_count << ',' << r.cnot_count << ',' << r.parameter_count << '\n';
        }
      }
      if (res_out.format == "csv") {
        res_out.write(csv.str(), out);
      } else {
        Json cfg = {{"modes", res_modes}, {"modals", res_modals}, {"ansatz", res_ansatz}, {"depth", res_depth}};
        res_out.write(dump(envelope("resources", cfg, rows)), out);
      }
      return 0;
    }

    if (vqe->parsed()) {
      auto [h, hcfg] = vqe_h.build();
      const VqeConfig cfg = vqe_o.config(h.layout);
      const VqeResult r = stage("vqe", [&] { return ground_state(h.qubit_operator, h.layout, cfg); });
      Json config = {{"hamiltonian", hcfg}, {"vqe", vqe_o.echo(cfg)}};
      vqe_out.write(dump(envelope("vqe", config, to_json(r))), out);
      return 0;
    }

    if (qeom->parsed()) {
      auto [h, hcfg] = qeom_h.build();
      Json config = {{"hamiltonian", hcfg}, {"ground", qeom_ground}, {"threshold", qeom_threshold}};
      Json result = Json::object();
      StateVector ground(h.layout.num_qubits());
      if (qeom_ground == "exact") {
        ground = stage("exact-ground-state", [&] { return physical_ground_state(h.qubit_operator, h.layout); });
        result["ground_energy"] = expectation(ground, h.qubit_operator);
      } else {
        const VqeConfig cfg = qeom_o.config(h.layout);
        config["vqe"] = qeom_o.echo(cfg);
        const VqeResult r = stage("vqe", [&] { return ground_state(h.qubit_operator, h.layout, cfg); });
        ground = run_circuit(build_ansatz(cfg.ansatz, h.layout, cfg.depth, cfg.trotter_steps), r.params);
        result["ground_energy"] = r.energy;
        result["vqe"] = to_json(r);
      }
      const QeomResult q = stage("qeom", [&] { return excited_states(ground, h.qubit_operator, h.layout, qeom_threshold); });
      const Json excited = to_json(q);
      for (const auto& [key, value] : excited.items()) result[key] = value;
      qeom_out.write(dump(envelope("qeom", config, result)), out);
      return 0;
    }

    if (noise->parsed()) {
      const QubitLayout layout(parse_list(noise_modals, "--modals"));
      const FidelityReport report = stage("noise-fidelity", [&] { return run_fidelity_experiment(layout, noise_cfg); });
      Json result = to_json(report);
      Json config = result["config"];
      config["modals"] = layout.modal_counts();
      result.erase("config");
      noise_out.write(dump(envelope("noise-fidelity", config, result)), out);
      return 0;
    }

    if (exact->parsed()) {
      auto [h, hcfg] = exact_h.build();
      const auto spectrum = stage("exact", [&] { return physical_spectrum(h.qubit_operator, h.layout); });
      Json result = {{"physical_dimension", spectrum.size()}, {"eigenvalues", spectrum}};
      exact_out.write(dump(envelope("exact", hcfg, result)), out);
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "vibriq: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "vibriq: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace vibriq
