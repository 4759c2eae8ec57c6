// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqc/circuit.hpp"
#include "vqc/pauli.hpp"
#include "vqc/simulator.hpp"

namespace vqc {

enum class Geometry { line, ring, grid };
Geometry geometry_from_name(const std::string& name);
std::string geometry_name(Geometry g);

/// Edges of the interaction geometry (grid requires a perfect square n).
std::vector<std::pair<std::size_t, std::size_t>> geometry_edges(Geometry g, std::size_t n);

/// Proper edge-coloring schedule: each entangling layer applies one matching
/// (no two gates share a qubit), cycling through the color classes.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> geometry_matchings(Geometry g,
                                                                                 std::size_t n);

enum class AnsatzFamily { hardware_efficient, brick_layer, circuit_shaped };
AnsatzFamily ansatz_family_from_name(const std::string& name);
std::string ansatz_family_name(AnsatzFamily f);

/// hardware_efficient: an RY layer, then per depth unit one matching of CRY
/// entanglers followed by an RY layer (n(c+1) + sum of matching sizes
/// parameters). brick_layer: per depth unit one matching of
/// [RY, RY, CRY] bricks. circuit_shaped: the target circuit with its own
/// rotation angles as the parameters.
struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::hardware_efficient;
  std::size_t n = 0;
  std::size_t depth = 0;
  Geometry geometry = Geometry::line;
  std::optional<Circuit> circuit;  // circuit_shaped target
};

std::size_t param_count(const AnsatzSpec& spec);

/// Deterministic state preparation; all angles in radians. RY(0) = I, so the
/// all-zero parameter vector prepares |0...0> for the layered families.
StateVector ansatz_state(const AnsatzSpec& spec, const std::vector<double>& params);

/// The parameter vector the first restart starts from: the target circuit's
/// own angles for circuit_shaped, zeros otherwise.
std::vector<double> initial_parameters(const AnsatzSpec& spec);

struct OptimizationRun {
  std::vector<double> best_params;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  bool accepted = false;
  double threshold = 0.0;
  /// Improvements as (evaluation index, value) pairs.
  std::vector<std::pair<std::size_t, double>> trace;
};

struct MinimizeOptions {
  double threshold = 1.0;       // acceptance Delta
  std::size_t budget = 5000;    // objective evaluations
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;      // 0 = exact evaluation, else shots per term
};

/// Seeded coordinate descent with golden-section line search per angle and
/// uniform random restarts. Deterministic given the seed; accepted follows
/// best_value < threshold exactly.
OptimizationRun minimize(const PauliSum& objective, const AnsatzSpec& spec,
                         const MinimizeOptions& options);

/// Fixed per-term shot-sampled estimate (the CLI's --shots mode).
double sampled_expected_value_fixed(const StateVector& s, const PauliSum& h,
                                    std::uint64_t shots_per_term, std::uint64_t seed);

struct WitnessReport {
  double energy = 0.0;
  bool accepted = false;
  double lemma1_lower = 0.0;
  double lemma1_upper = 0.0;
  double gap = 0.0;
  double trace = 0.0;
  double ground_energy = 0.0;
  bool degenerate = false;
};

/// Exact witness evaluation with stability bounds from the objective's
/// certified gap and symbolic trace.
WitnessReport witness_check(const PauliSum& objective, const StateVector& witness, double delta,
                            std::size_t dim_cap = kEigenDimCap);
WitnessReport witness_check(const PauliSum& objective, const Circuit& witness, double delta,
                            std::size_t dim_cap = kEigenDimCap);

/// tr(H) = 2^n times the identity coefficient; non-identity words are traceless.
double trace_of(const PauliSum& objective);

}  // namespace vqc
