// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vqc/circuit.hpp"
#include "vqc/pauli.hpp"

namespace vqc {

/// Width cap for dense statevector simulation.
inline constexpr std::size_t kStateQubitCap = 22;
/// Dimension cap for the dense eigensolver (2^12 = 4096).
inline constexpr std::size_t kEigenDimCap = 4096;
/// Gaps below this flag a degenerate ground space.
inline constexpr double kDegeneracyTol = 1e-9;
/// Singular values below this do not count toward the Schmidt rank.
inline constexpr double kSchmidtTol = 1e-8;

/// Dense normalized amplitude vector; qubit q is bit q of the basis index.
class StateVector {
 public:
  explicit StateVector(std::size_t n);
  StateVector(std::size_t n, Eigen::VectorXcd amplitudes);

  static StateVector zero_state(std::size_t n);
  /// Basis state |index>.
  static StateVector basis_state(std::size_t n, std::uint64_t index);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t j) const { return amps_(static_cast<Eigen::Index>(j)); }

  double norm() const { return amps_.norm(); }
  void normalize() { amps_ /= amps_.norm(); }

  void apply_gate(const Gate& g);
  /// Applies a 2^k x 2^k unitary on the listed qubits (first qubit = least
  /// significant local index bit).
  void apply_local(const std::vector<std::size_t>& qubits, const Eigen::MatrixXcd& m);
  Complex inner(const StateVector& other) const;
  double overlap2(const StateVector& other) const;

 private:
  std::size_t n_;
  Eigen::VectorXcd amps_;
};

/// Applies the circuit to the input state, gates in listed order.
StateVector run(const Circuit& c, const StateVector& input);
StateVector run(const Circuit& c);  // from |0...0>

/// Exact <s|H|s>, evaluated term by term without densifying H.
double expected_value(const StateVector& s, const PauliSum& h);

/// Hoeffding shot allocation: N_w = ceil(2 ln(2m/delta) (m|J_w|/eps)^2) per
/// term, union bound over the m terms; identity terms are deterministic.
std::vector<std::uint64_t> shot_plan(const PauliSum& h, double epsilon, double delta);

/// Per-term shot-sampled estimate of <s|H|s>. With the plan above,
/// |estimate - exact| <= epsilon with probability >= 1 - delta.
double sampled_expected_value(const StateVector& s, const PauliSum& h, double epsilon,
                              double delta, std::uint64_t seed);

/// var(H) = <H^2> - <H>^2; zero exactly on eigenstates.
double dispersion(const StateVector& s, const PauliSum& h);

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  double gap = 0.0;                 // lambda_1 - lambda_0
  StateVector ground_vector;
  bool degenerate = false;          // gap below kDegeneracyTol
  double ground_residual = 0.0;     // ||H v0 - lambda_0 v0||
};

/// Full dense Hermitian eigensolve of to_dense(h).
SpectralReport spectral_report(const PauliSum& h, std::size_t dim_cap = kEigenDimCap);

/// The two overlap bounds (1 - energy/gap, 1 - energy/trace); the lower bound
/// may be negative (vacuous) and is returned as-is.
std::pair<double, double> stability_bounds(double energy, double gap, double trace);

struct EbitReport {
  double rank_ebits = 0.0;     // log2(numerical Schmidt rank)
  double entropy_ebits = 0.0;  // von Neumann entropy of the reduced state, bits
};

/// Schmidt data across the bipartition given by `cut_mask` (bit q set = qubit
/// q on the row side). Throws on a trivial cut.
EbitReport schmidt_ebits(const StateVector& s, std::uint64_t cut_mask);

}  // namespace vqc
