// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vqc/circuit.hpp"
#include "vqc/pauli.hpp"
#include "vqc/simulator.hpp"

namespace vqc {

/// ceil(log2(L+1)) qubits hold clock values 0..L in binary (0 for L = 0).
std::size_t clock_qubit_count(std::size_t num_gates);

/// Rank-one diagonal projector |x><x| on the clock qubits as a 2^len-term
/// sum; string position i = clock qubit i = bit i of the clock value.
PauliSum clock_projector(const std::string& bits);
PauliSum clock_projector(std::uint64_t value, std::size_t clock_qubits);

/// |t><t-1| + |t-1><t| over binary-encoded clock states, expanded through
/// per-qubit ladder operators. Hermitian with real coefficients.
PauliSum transition_operator(std::size_t t, std::size_t clock_qubits);

/// Pauli expansion of a gate's (Hermitian) matrix on an n-qubit register.
PauliSum gate_pauli_expansion(const Gate& g, std::size_t n);

/// Register circuit tensored with a binary clock. The register circuit is
/// stored self-inverse-compiled with `padding` trailing identity gates.
struct ClockSystem {
  Circuit register_circuit;
  std::size_t n = 0;
  std::size_t clock_qubits = 0;
  double J = 1.0;
  double K_weight = 1.0;
  std::size_t padding = 0;
  std::vector<Gate> input_map;  // V: single-qubit input preparation

  std::size_t num_gates() const { return register_circuit.size(); }
  std::size_t total_qubits() const { return n + clock_qubits; }
};

/// Compiles the circuit to self-inverse gates if needed, appends `padding`
/// identity gates, and sizes the clock register.
ClockSystem make_clock_system(const Circuit& circuit, double J = 1.0, double K_weight = 1.0,
                              std::size_t padding = 0, std::vector<Gate> input_map = {});

/// H_prop = sum_t (1/2)(I (x) (|t><t| + |t-1><t-1|) - U_t (x) (|t><t-1| + h.c.))
/// on n + clock qubits. Each summand is a projector; the history state is
/// annihilated. Requires every gate self-inverse.
PauliSum build_h_prop(const Circuit& register_circuit, std::size_t clock_qubits);

/// H_in = V (sum_i |1><1|_i) V^dag (x) |0><0|_clock; unit gap, kernel spans
/// every |zeta>(x)|c> with c > 0 plus V|0...0>(x)|0>.
PauliSum build_h_in(std::size_t n, const std::vector<Gate>& input_map, std::size_t clock_qubits);

/// Projector onto clock values above `num_gates` (the binary states the walk
/// never visits); empty when 2^clock_qubits == num_gates + 1.
PauliSum spectator_projector(std::size_t num_gates, std::size_t clock_qubits);

/// J*H_in + K*H_prop, plus (J+2K) times the spectator projector so the
/// history state is the unique zero-energy ground state.
PauliSum build_objective(const ClockSystem& sys);

struct HistoryState {
  StateVector state;
  std::size_t L = 0;
};

/// (L+1)^{-1/2} sum_t (U_t...U_1 V|0...0>) (x) |t>.
HistoryState history_state(const ClockSystem& sys);

/// Lemma-style closed form max{J, K pi^2 / (2 (L+1)^2)}.
double gap_lower_bound(std::size_t num_gates, double J, double K_weight);

struct PadReport {
  ClockSystem padded;
  PauliSum objective;
  /// 1 / (1 + (L+1)/K_pad); absent when padding is disabled (K_pad = 0).
  std::optional<double> predicted_overlap;
  /// |<output (x) window|psi_hist>|^2 over the K_pad slots {L..L+K_pad-1}
  /// ({L} alone when K_pad = 0).
  double measured_overlap = 0.0;
};

/// Rebuilds the system with K_pad identity padding gates and evaluates the
/// overlap-boost law on its history state.
PadReport pad_and_project(const ClockSystem& sys, std::size_t k_pad);

struct ClockCertificate {
  std::size_t L = 0;
  std::size_t clock_qubits = 0;
  std::size_t cardinality = 0;
  double gap = 0.0;
  double gap_bound = 0.0;
  bool bound_violated = false;
  double ground_energy = 0.0;
  bool degenerate = false;
  double ground_overlap_with_history = 0.0;
  double history_energy = 0.0;
};

/// Dense certification: spectrum of build_objective, history-state overlap
/// and energy, and the gap bound comparison (violations are reported, not
/// asserted).
ClockCertificate certify_clock(const ClockSystem& sys, std::size_t dim_cap = kEigenDimCap);

}  // namespace vqc
