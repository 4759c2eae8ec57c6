// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "vqc/circuit.hpp"
#include "vqc/pauli.hpp"
#include "vqc/simulator.hpp"

namespace vqc {

/// Default per-objective cardinality budget.
inline constexpr std::size_t kDefaultCardinalityBudget = 100000;

/// The initial projector Hamiltonian: without V, (n/2) I - (1/2) sum_i Z_i
/// (cardinality n+1, ground |0...0>, eigenvalue = Hamming weight). With V, a
/// list of single-qubit gates applied in order, the projectors conjugate
/// per-gate and the ground state becomes V|0...0>.
PauliSum initial_hamiltonian(std::size_t n, const std::vector<Gate>& product_map = {});

/// The conjugated objective h(k) = (U_k...U_1) P (U_1^dag...U_k^dag), tracked
/// one gate at a time. The spectrum {0..n} and unit gap are invariants.
class TelescopeObjective {
 public:
  TelescopeObjective(Circuit circuit, std::vector<Gate> product_map = {},
                     std::size_t cardinality_budget = kDefaultCardinalityBudget);

  /// Conjugates by the next circuit gate. Throws when the circuit is
  /// exhausted or the cardinality budget is breached.
  void extend();
  void extend_all();

  const PauliSum& hamiltonian() const { return h_; }
  std::size_t k() const { return k_; }
  const Circuit& circuit() const { return circuit_; }
  const std::vector<Gate>& product_map() const { return map_; }
  std::size_t cardinality() const { return h_.cardinality(); }

  /// The state the current prefix prepares: (U_k...U_1) V |0...0>.
  StateVector prefix_state() const;

 private:
  Circuit circuit_;
  std::vector<Gate> map_;
  PauliSum h_;
  std::size_t k_ = 0;
  std::size_t budget_;
};

struct TelescopeCertificate {
  std::size_t k = 0;
  std::size_t cardinality = 0;
  std::vector<double> eigenvalues;
  double gap = 0.0;
  double ground_overlap = 0.0;  // |<ground|prefix output>|^2
  double circuit_energy = 0.0;  // <prefix output|h(k)|prefix output>
  double lemma1_lower = 0.0;
  double lemma1_upper = 0.0;
};

/// Dense certification of the current objective: spectrum, gap (expected
/// exactly 1), overlap of the ground vector with the prefix output, the
/// output's energy, and the stability bounds at that energy. Throws
/// CertificationError if the ground space is degenerate.
TelescopeCertificate certify(const TelescopeObjective& t, std::size_t dim_cap = kEigenDimCap);

struct BudgetForecast {
  std::size_t initial_cardinality = 0;
  double bound = 0.0;  // (n+1) * product of per-gate growth factors
  bool within_budget = true;
};

/// Predicted cardinality upper bound without building anything: Clifford
/// gates contribute factor 1, k-qubit non-Clifford gates factor 16^k.
BudgetForecast budget_check(const Circuit& c, std::size_t max_cardinality);

}  // namespace vqc
