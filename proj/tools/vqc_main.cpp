// SPDX-License-Identifier: Apache-2.0
//
// vqc — compile quantum circuits into variational objectives and certify
// them. Subcommands: telescope, clock, optimize, arealaw, verify.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "vqc/arealaw.hpp"
#include "vqc/circuit.hpp"
#include "vqc/clock.hpp"
#include "vqc/simulator.hpp"
#include "vqc/telescope.hpp"
#include "vqc/variational.hpp"
#include "vqc/version.hpp"

using json = nlohmann::ordered_json;
using namespace vqc;

namespace {

// Exit codes shared with the test harness.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitCertification = 4;
constexpr int kExitAcceptance = 5;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(ss.str())));
  return buf;
}

struct Meta {
  std::string command;
  std::uint64_t seed = 0;
  json inputs = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json finish() const {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return json{{"version", kVersion},
                {"command", command},
                {"seed", seed},
                {"inputs", inputs},
                {"wall_ms", ms}};
  }
};

std::string echo_command(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

json optional_double(std::optional<double> v) {
  if (v) return *v;
  return nullptr;
}

int run_telescope(const std::string& circuit_path, const std::string& out_path,
                  const std::string& report_path, std::size_t budget, std::size_t dense_cap,
                  Meta meta) {
  const Circuit circuit = load_circuit(circuit_path);
  meta.inputs["circuit"] = file_digest(circuit_path);
  const BudgetForecast forecast = budget_check(circuit, budget);

  TelescopeObjective t(circuit, {}, budget);
  std::vector<json> rows;
  const bool certifiable = circuit.n <= dense_cap;
  auto emit = [&]() {
    json row{{"k", t.k()}, {"cardinality", t.cardinality()}};
    if (certifiable) {
      const TelescopeCertificate cert = certify(t);
      row["gap"] = cert.gap;
      row["ground_overlap"] = cert.ground_overlap;
      row["circuit_energy"] = cert.circuit_energy;
    } else {
      row["gap"] = nullptr;
      row["ground_overlap"] = nullptr;
      row["circuit_energy"] = nullptr;
    }
    rows.push_back(std::move(row));
  };
  try {
    emit();
    while (t.k() < circuit.size()) {
      t.extend();
      emit();
    }
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "forecast: initial cardinality " << forecast.initial_cardinality
              << ", bound " << forecast.bound << " against budget " << budget << "\n";
    return kExitCap;
  }

  if (!out_path.empty()) write_file(out_path, serialize_pauli_sum(t.hamiltonian()));
  if (!report_path.empty()) {
    std::ostringstream lines;
    lines << json{{"meta", meta.finish()}}.dump() << "\n";
    for (const json& row : rows) lines << row.dump() << "\n";
    write_file(report_path, lines.str());
  }
  return kExitOk;
}

int run_clock(const std::string& circuit_path, const std::string& out_path,
              const std::string& report_path, double J, double K, std::size_t pad,
              std::size_t dense_cap, Meta meta) {
  const Circuit circuit = load_circuit(circuit_path);
  meta.inputs["circuit"] = file_digest(circuit_path);

  const ClockSystem base = make_clock_system(circuit, J, K, 0);
  const PadReport padded = pad_and_project(base, pad);
  if (!out_path.empty()) write_file(out_path, serialize_pauli_sum(padded.objective));

  json payload{{"L", padded.padded.num_gates()},
               {"clock_qubits", padded.padded.clock_qubits},
               {"cardinality", padded.objective.cardinality()},
               {"eq18_predicted", optional_double(padded.predicted_overlap)},
               {"eq18_measured", padded.measured_overlap}};
  bool degenerate = false;
  if (padded.padded.total_qubits() <= dense_cap) {
    const ClockCertificate cert = certify_clock(padded.padded);
    payload["gap"] = cert.gap;
    payload["gap_bound"] = cert.gap_bound;
    payload["bound_violated"] = cert.bound_violated;
    payload["ground_overlap_with_history"] = cert.ground_overlap_with_history;
    payload["ground_energy"] = cert.ground_energy;
    payload["degenerate"] = cert.degenerate;
    degenerate = cert.degenerate;
  } else {
    payload["gap"] = nullptr;
    payload["gap_bound"] = gap_lower_bound(padded.padded.num_gates(), J, K);
    payload["bound_violated"] = nullptr;
    payload["ground_overlap_with_history"] = nullptr;
    payload["ground_energy"] = nullptr;
    payload["degenerate"] = nullptr;
  }
  if (!report_path.empty()) {
    write_file(report_path, json{{"meta", meta.finish()}, {"payload", payload}}.dump(2) + "\n");
  }
  if (degenerate) {
    std::cerr << "error: clock objective has a degenerate ground space\n";
    return kExitCertification;
  }
  return kExitOk;
}

int run_optimize(const std::string& objective_path, const std::string& ansatz,
                 const std::string& geometry, std::size_t depth, double delta,
                 std::size_t budget, std::uint64_t shots, const std::string& circuit_path,
                 const std::string& report_path, Meta meta) {
  const PauliSum objective = load_pauli_sum(objective_path);
  meta.inputs["objective"] = file_digest(objective_path);

  AnsatzSpec spec;
  spec.family = ansatz_family_from_name(ansatz);
  spec.n = objective.n();
  spec.depth = depth;
  spec.geometry = geometry_from_name(geometry);
  if (spec.family == AnsatzFamily::circuit_shaped) {
    if (circuit_path.empty()) {
      throw ParseError("circuit_shaped ansatz requires --circuit");
    }
    spec.circuit = load_circuit(circuit_path);
    meta.inputs["circuit"] = file_digest(circuit_path);
    if (spec.circuit->n != objective.n()) {
      throw DimensionError("objective and ansatz circuit widths differ");
    }
  }

  MinimizeOptions options;
  options.threshold = delta;
  options.budget = budget;
  options.seed = meta.seed;
  options.shots = shots;
  const OptimizationRun result = minimize(objective, spec, options);

  json trace = json::array();
  for (const auto& [eval, value] : result.trace) {
    trace.push_back(json{{"evaluation", eval}, {"value", value}});
  }
  json payload{{"best_value", result.best_value},
               {"accepted", result.accepted},
               {"threshold", result.threshold},
               {"evaluations", result.evaluations},
               {"ansatz", ansatz},
               {"parameters", result.best_params},
               {"trace", trace}};
  if (!report_path.empty()) {
    write_file(report_path, json{{"meta", meta.finish()}, {"payload", payload}}.dump(2) + "\n");
  }
  return result.accepted ? kExitOk : kExitAcceptance;
}

int run_arealaw(const std::string& geometry, std::size_t n, std::size_t depth,
                std::size_t draws, const std::string& report_path, Meta meta) {
  const ArealawSweep sweep =
      arealaw_sweep(geometry_from_name(geometry), n, depth, draws, meta.seed);
  json payload{{"geometry", geometry},
               {"n", n},
               {"depth", depth},
               {"draws", sweep.draws},
               {"bound", sweep.bound},
               {"max_rank_ebits", sweep.max_rank_ebits},
               {"max_entropy_ebits", sweep.max_entropy_ebits},
               {"ceiling_respected", sweep.max_rank_ebits <= sweep.bound + 1e-9},
               {"per_cut_max_rank", sweep.per_cut_max_rank},
               {"per_cut_max_entropy", sweep.per_cut_max_entropy},
               {"entropy_histogram", sweep.entropy_histogram},
               {"histogram_bin_width", sweep.histogram_bin_width},
               {"saturating_depth", saturating_depth(geometry_from_name(geometry), n)}};
  if (!report_path.empty()) {
    write_file(report_path, json{{"meta", meta.finish()}, {"payload", payload}}.dump(2) + "\n");
  }
  return kExitOk;
}

int run_verify(const std::string& objective_path, const std::string& witness_path, double delta,
               const std::string& report_path, Meta meta) {
  const PauliSum objective = load_pauli_sum(objective_path);
  const Circuit witness = load_circuit(witness_path);
  meta.inputs["objective"] = file_digest(objective_path);
  meta.inputs["witness"] = file_digest(witness_path);

  const WitnessReport report = witness_check(objective, witness, delta);
  json payload{{"energy", report.energy},
               {"accepted", report.accepted},
               {"threshold", delta},
               {"lemma1_lower", report.lemma1_lower},
               {"lemma1_upper", report.lemma1_upper},
               {"gap", report.gap},
               {"trace", report.trace},
               {"ground_energy", report.ground_energy},
               {"degenerate", report.degenerate}};
  if (!report_path.empty()) {
    write_file(report_path, json{{"meta", meta.finish()}, {"payload", payload}}.dump(2) + "\n");
  }
  if (report.degenerate) {
    std::cerr << "error: objective ground space is degenerate; stability bounds do not apply\n";
    return kExitCertification;
  }
  return report.accepted ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compile quantum circuits into certifiable variational objectives"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t dense_cap = kDenseQubitCap;
  app.add_option("--seed", seed, "global random seed")->capture_default_str();
  app.add_option("--dense-cap", dense_cap, "qubit cap for dense certification")
      ->capture_default_str();

  std::string circuit_path, out_path, report_path, objective_path, witness_path;
  std::string ansatz = "hardware_efficient", geometry = "line";
  double J = 1.0, K = 1.0, delta = 1.0;
  std::size_t pad = 0, depth = 1, budget = 5000, n = 4, draws = 1000;
  std::size_t card_budget = kDefaultCardinalityBudget;
  std::uint64_t shots = 0;

  CLI::App* telescope = app.add_subcommand("telescope", "conjugated-projector objective");
  telescope->add_option("--circuit", circuit_path, "circuit file")->required();
  telescope->add_option("--out", out_path, "output Pauli file");
  telescope->add_option("--report", report_path, "JSON-lines certification report");
  telescope->add_option("--budget", card_budget, "cardinality budget")->capture_default_str();

  CLI::App* clock = app.add_subcommand("clock", "history-state objective");
  clock->add_option("--circuit", circuit_path, "circuit file")->required();
  clock->add_option("--J", J, "input-penalty weight")->capture_default_str();
  clock->add_option("--K", K, "propagation weight")->capture_default_str();
  clock->add_option("--pad", pad, "identity padding gates")->capture_default_str();
  clock->add_option("--out", out_path, "output Pauli file");
  clock->add_option("--report", report_path, "JSON report");

  CLI::App* optimize = app.add_subcommand("optimize", "minimize an objective");
  optimize->add_option("--objective", objective_path, "Pauli file")->required();
  optimize->add_option("--ansatz", ansatz, "hardware_efficient|brick_layer|circuit_shaped")
      ->capture_default_str();
  optimize->add_option("--geometry", geometry, "line|ring|grid")->capture_default_str();
  optimize->add_option("--depth", depth, "entangling layers")->capture_default_str();
  optimize->add_option("--delta", delta, "acceptance threshold")->capture_default_str();
  optimize->add_option("--budget", budget, "objective evaluations")->capture_default_str();
  optimize->add_option("--shots", shots, "shots per term (0 = exact)")->capture_default_str();
  optimize->add_option("--circuit", circuit_path, "target circuit for circuit_shaped");
  optimize->add_option("--report", report_path, "JSON report");

  CLI::App* arealaw = app.add_subcommand("arealaw", "entanglement ceiling sweep");
  arealaw->add_option("--geometry", geometry, "line|ring|grid")->capture_default_str();
  arealaw->add_option("--n", n, "qubit count")->capture_default_str();
  arealaw->add_option("--depth", depth, "entangling layers")->capture_default_str();
  arealaw->add_option("--draws", draws, "random parameter draws")->capture_default_str();
  arealaw->add_option("--report", report_path, "JSON report");

  CLI::App* verify = app.add_subcommand("verify", "re-check an objective/witness pair");
  verify->add_option("--objective", objective_path, "Pauli file")->required();
  verify->add_option("--witness", witness_path, "witness circuit file")->required();
  verify->add_option("--delta", delta, "acceptance threshold")->capture_default_str();
  verify->add_option("--report", report_path, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitParse;
  }

  Meta meta;
  meta.command = echo_command(argc, argv);
  meta.seed = seed;

  try {
    if (telescope->parsed()) {
      return run_telescope(circuit_path, out_path, report_path, card_budget, dense_cap, meta);
    }
    if (clock->parsed()) {
      return run_clock(circuit_path, out_path, report_path, J, K, pad, dense_cap, meta);
    }
    if (optimize->parsed()) {
      return run_optimize(objective_path, ansatz, geometry, depth, delta, budget, shots,
                          circuit_path, report_path, meta);
    }
    if (arealaw->parsed()) {
      return run_arealaw(geometry, n, depth, draws, report_path, meta);
    }
    if (verify->parsed()) {
      return run_verify(objective_path, witness_path, delta, report_path, meta);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
