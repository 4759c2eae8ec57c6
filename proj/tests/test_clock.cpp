// SPDX-License-Identifier: Apache-2.0

#include "vqc/clock.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace vqc;

namespace {

Circuit identity_circuit(std::size_t L) {
  Circuit c(1);
  for (std::size_t i = 0; i < L; ++i) c.add(Gate::i(0));
  return c;
}

Circuit random_self_inverse_circuit(std::size_t n, std::size_t L, std::mt19937_64& rng) {
  Circuit c(n);
  for (std::size_t i = 0; i < L; ++i) c.add(oracle::random_self_inverse_gate(n, rng));
  return c;
}

// Walk-sector matrix elements <0,t|H_prop|0,s> for identity-gate circuits.
Eigen::MatrixXd walk_block(const PauliSum& h_prop, std::size_t n, std::size_t L) {
  const std::size_t dim = std::size_t{1} << h_prop.n();
  const Eigen::MatrixXcd dense = to_dense(h_prop);
  Eigen::MatrixXd block(L + 1, L + 1);
  for (std::size_t t = 0; t <= L; ++t) {
    for (std::size_t s = 0; s <= L; ++s) {
      block(t, s) = dense(t << n, s << n).real();
      (void)dim;
    }
  }
  return block;
}

}  // namespace

TEST_CASE("clock_qubit_count") {
  CHECK(clock_qubit_count(0) == 0);
  CHECK(clock_qubit_count(1) == 1);
  CHECK(clock_qubit_count(2) == 2);
  CHECK(clock_qubit_count(3) == 2);
  CHECK(clock_qubit_count(4) == 3);
  CHECK(clock_qubit_count(7) == 3);
  CHECK(clock_qubit_count(8) == 4);
}

TEST_CASE("clock_projector expansions and diagonal structure") {
  const PauliSum p0 = clock_projector("0");
  CHECK(p0.cardinality() == 2);
  CHECK(p0.coefficient(PauliWord::identity(1)) == doctest::Approx(0.5));
  CHECK(p0.coefficient(PauliWord::from_string("Z")) == doctest::Approx(0.5));

  const PauliSum p1 = clock_projector("1");
  CHECK(p1.coefficient(PauliWord::from_string("Z")) == doctest::Approx(-0.5));

  for (std::uint64_t x = 0; x < 8; ++x) {
    const Eigen::MatrixXcd d = to_dense(clock_projector(x, 3));
    for (std::uint64_t j = 0; j < 8; ++j) {
      CHECK(std::abs(d(j, j) - Complex(j == x ? 1.0 : 0.0, 0.0)) < 1e-12);
    }
    CHECK((d - d.cwiseProduct(Eigen::MatrixXcd::Identity(8, 8))).cwiseAbs().maxCoeff() <
          1e-12);
  }

  CHECK_THROWS_AS(clock_projector("02"), ParseError);
  CHECK_THROWS_AS(clock_projector(4, 2), DimensionError);
}

TEST_CASE("transition_operator fixed cases") {
  const PauliSum t1 = transition_operator(1, 1);
  CHECK(t1.cardinality() == 1);
  CHECK(t1.coefficient(PauliWord::from_string("X")) == doctest::Approx(1.0));

  // L = 3, t = 2: binary 01 <-> 10 gives (XX + YY)/2; the cross terms cancel.
  const PauliSum t2 = transition_operator(2, 2);
  CHECK(t2.cardinality() == 2);
  CHECK(t2.coefficient(PauliWord::from_string("XX")) == doctest::Approx(0.5));
  CHECK(t2.coefficient(PauliWord::from_string("YY")) == doctest::Approx(0.5));

  CHECK_THROWS_AS(transition_operator(0, 2), DimensionError);
  CHECK_THROWS_AS(transition_operator(4, 2), DimensionError);
}

TEST_CASE("transition_operator dense form has exactly two unit off-diagonals") {
  for (std::size_t nc : {2, 3}) {
    for (std::size_t t = 1; t < (std::size_t{1} << nc); ++t) {
      const Eigen::MatrixXcd d = to_dense(transition_operator(t, nc));
      CHECK((d - d.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      for (std::uint64_t r = 0; r < d.rows(); ++r) {
        for (std::uint64_t c = 0; c < d.cols(); ++c) {
          const bool hot = (r == t && c == t - 1) || (r == t - 1 && c == t);
          CHECK(std::abs(d(r, c) - Complex(hot ? 1.0 : 0.0, 0.0)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("gate_pauli_expansion matches dense matrices for Hermitian gates") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Gate g = oracle::random_self_inverse_gate(3, rng);
    const PauliSum e = gate_pauli_expansion(g, 3);
    CHECK((to_dense(e) - oracle::gate_matrix_full(g, 3)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(gate_pauli_expansion(Gate::t(0), 1), ClassificationError);
}

TEST_CASE("build_h_prop: L=1 X gate spectrum and projector structure") {
  Circuit c(1);
  c.add(Gate::x(0));
  const PauliSum h = build_h_prop(c, 1);
  const SpectralReport spec = spectral_report(h);
  REQUIRE(spec.eigenvalues.size() == 4);
  CHECK(spec.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.eigenvalues[2] == doctest::Approx(1.0));
  CHECK(spec.eigenvalues[3] == doctest::Approx(1.0));

  Circuit bad(1);
  bad.add(Gate::t(0));
  CHECK_THROWS_AS(build_h_prop(bad, 1), ClassificationError);
}

TEST_CASE("each propagation summand is a projector") {
  std::mt19937_64 rng(5);
  const Circuit c = random_self_inverse_circuit(2, 3, rng);
  const std::size_t nc = clock_qubit_count(c.size());
  for (std::size_t t = 1; t <= c.size(); ++t) {
    Circuit single(2);
    single.add(c.gates[t - 1]);
    // Build H_t in isolation at the t-th step by shifting the clock labels:
    // here we check the t=1 summand of a single-gate circuit, which is H_t
    // up to clock relabeling.
    const PauliSum ht = 0.5 * (tensor(PauliSum::identity(2),
                                      clock_projector(1, nc) + clock_projector(0, nc)) -
                               tensor(gate_pauli_expansion(c.gates[t - 1], 2),
                                      transition_operator(1, nc)));
    const Eigen::MatrixXcd d = to_dense(ht);
    CHECK((d * d - d).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("walk-sector eigenvalues follow 1 - cos(pi k / (L+1))") {
  for (std::size_t L = 1; L <= 7; ++L) {
    const Circuit c = identity_circuit(L);
    const std::size_t nc = clock_qubit_count(L);
    const PauliSum h = build_h_prop(c, nc);
    const Eigen::MatrixXd block = walk_block(h, 1, L);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    for (std::size_t k = 0; k <= L; ++k) {
      const double expect = 1.0 - std::cos(M_PI * static_cast<double>(k) /
                                           static_cast<double>(L + 1));
      CHECK(solver.eigenvalues()(k) == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("history state is annihilated by H_prop") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t L = 2 + trial % 6;  // up to 7
    const ClockSystem sys = make_clock_system(random_self_inverse_circuit(n, L, rng));
    const PauliSum h_prop = build_h_prop(sys.register_circuit, sys.clock_qubits);
    const HistoryState hist = history_state(sys);
    CHECK(expected_value(hist.state, h_prop) == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("build_h_in expansion, kernel, and constructed ground state") {
  const PauliSum h = build_h_in(1, {}, 1);
  CHECK(h.cardinality() == 4);  // (I-Z)/2 (x) (I+Z)/2
  CHECK(h.coefficient(PauliWord::from_string("II")) == doctest::Approx(0.25));
  CHECK(h.coefficient(PauliWord::from_string("ZI")) == doctest::Approx(-0.25));
  CHECK(h.coefficient(PauliWord::from_string("IZ")) == doctest::Approx(0.25));
  CHECK(h.coefficient(PauliWord::from_string("ZZ")) == doctest::Approx(-0.25));

  // Kernel contains every |zeta> (x) |c> with c > 0.
  std::mt19937_64 rng(9);
  const PauliSum h2 = build_h_in(2, {Gate::h(0)}, 2);
  const Eigen::MatrixXcd d = to_dense(h2);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::VectorXcd zeta = oracle::random_state(2, rng);
    for (std::uint64_t c = 1; c < 4; ++c) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
      for (std::uint64_t r = 0; r < 4; ++r) v(r | (c << 2)) = zeta(r);
      CHECK((d * v).norm() < 1e-12);
    }
  }

  // V|0...0> (x) |0> has energy 0; H_in has unit gap above its kernel.
  StateVector ground = StateVector::zero_state(2);
  ground.apply_gate(Gate::h(0));
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(16);
  for (std::uint64_t r = 0; r < 4; ++r) full(r) = ground.amplitude(r);
  CHECK((d * full).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d);
  double smallest_nonzero = 1e9;
  for (Eigen::Index i = 0; i < 16; ++i) {
    if (solver.eigenvalues()(i) > 1e-9) {
      smallest_nonzero = std::min(smallest_nonzero, solver.eigenvalues()(i));
    }
  }
  CHECK(smallest_nonzero == doctest::Approx(1.0));
}

TEST_CASE("spectators are penalized out of the ground space") {
  // L = 2 leaves one unused clock state; without the penalty the ground
  // space would be degenerate.
  Circuit c(1);
  c.add(Gate::x(0)).add(Gate::h(0));
  const ClockSystem sys = make_clock_system(c);
  CHECK(spectator_projector(2, 2).cardinality() == 4);
  CHECK(spectator_projector(3, 2).cardinality() == 0);

  const PauliSum without = sys.J * build_h_in(sys.n, sys.input_map, sys.clock_qubits) +
                           sys.K_weight * build_h_prop(sys.register_circuit, sys.clock_qubits);
  CHECK(spectral_report(without).degenerate);

  const PauliSum with_penalty = build_objective(sys);
  const SpectralReport spec = spectral_report(with_penalty);
  CHECK_FALSE(spec.degenerate);
  CHECK(spec.eigenvalues.front() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("build_objective: L=1 X gate ground state is the bell-like history") {
  Circuit c(1);
  c.add(Gate::x(0));
  const ClockSystem sys = make_clock_system(c);
  const PauliSum h = build_objective(sys);
  const SpectralReport spec = spectral_report(h);
  CHECK(spec.eigenvalues.front() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK_FALSE(spec.degenerate);
  StateVector want(2, Eigen::Vector4cd(1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)));
  CHECK(spec.ground_vector.overlap2(want) == doctest::Approx(1.0).epsilon(1e-10));
  const HistoryState hist = history_state(sys);
  CHECK(expected_value(hist.state, h) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("certify_clock on random self-inverse circuits") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t L = 1 + trial;
    const ClockSystem sys = make_clock_system(random_self_inverse_circuit(n, L, rng));
    const ClockCertificate cert = certify_clock(sys);
    CHECK(cert.ground_energy == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_FALSE(cert.degenerate);
    CHECK(cert.ground_overlap_with_history >= 1.0 - 1e-9);
    CHECK(cert.history_energy == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("history_state edge cases and amplitude structure") {
  // L = 0: no clock qubits, the history is the input itself.
  const ClockSystem empty = make_clock_system(Circuit(1), 1.0, 1.0, 0, {Gate::h(0)});
  CHECK(empty.clock_qubits == 0);
  const HistoryState h0 = history_state(empty);
  CHECK(h0.state.n() == 1);
  CHECK(std::abs(h0.state.amplitude(0) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);

  // L = 1, U = X from |0>: (|0,0> + |1,1>)/sqrt(2).
  Circuit c(1);
  c.add(Gate::x(0));
  const HistoryState h1 = history_state(make_clock_system(c));
  CHECK(std::abs(h1.state.amplitude(0b00) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(h1.state.amplitude(0b11) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);

  // Every time slot carries weight 1/(L+1).
  std::mt19937_64 rng(13);
  const ClockSystem sys = make_clock_system(random_self_inverse_circuit(2, 4, rng));
  const HistoryState hist = history_state(sys);
  for (std::size_t t = 0; t <= 4; ++t) {
    double w = 0.0;
    for (std::uint64_t r = 0; r < 4; ++r) {
      w += std::norm(hist.state.amplitude(r | (t << 2)));
    }
    CHECK(w == doctest::Approx(1.0 / 5.0).epsilon(1e-12));
  }
}

TEST_CASE("qubit accounting matches ceil(log2(L+1))") {
  std::mt19937_64 rng(17);
  for (std::size_t L = 1; L <= 9; ++L) {
    const ClockSystem sys = make_clock_system(random_self_inverse_circuit(1, L, rng));
    CHECK(sys.clock_qubits == clock_qubit_count(L));
    CHECK(sys.total_qubits() == 1 + clock_qubit_count(L));
  }
}

TEST_CASE("gap_lower_bound arithmetic") {
  CHECK(gap_lower_bound(3, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(gap_lower_bound(1, 0.01, 1.0) == doctest::Approx(M_PI * M_PI / 8.0));
  CHECK(gap_lower_bound(3, 0.0081, 0.1) ==
        doctest::Approx(0.1 * M_PI * M_PI / 32.0));
  CHECK_THROWS_AS(gap_lower_bound(3, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("gap bound violations are reported, not asserted") {
  // J = K = 1, L = 1, U = X: exact gap 1 - 1/sqrt(2), bound max{1, pi^2/8}.
  Circuit c(1);
  c.add(Gate::x(0));
  const ClockCertificate cert = certify_clock(make_clock_system(c));
  CHECK(cert.gap == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(cert.gap_bound == doctest::Approx(M_PI * M_PI / 8.0));
  CHECK(cert.bound_violated);
}

TEST_CASE("pad_and_project follows the overlap-boost law") {
  std::mt19937_64 rng(19);
  const Circuit c = random_self_inverse_circuit(1, 3, rng);
  const ClockSystem sys = make_clock_system(c);
  const std::size_t L = sys.num_gates();

  const PadReport none = pad_and_project(sys, 0);
  CHECK_FALSE(none.predicted_overlap.has_value());
  CHECK(none.measured_overlap == doctest::Approx(1.0 / (L + 1)).epsilon(1e-9));

  const PadReport half = pad_and_project(sys, L + 1);
  CHECK(half.predicted_overlap.value() == doctest::Approx(0.5));
  CHECK(half.measured_overlap == doctest::Approx(0.5).epsilon(1e-9));

  const PadReport nine = pad_and_project(sys, 9 * (L + 1));
  CHECK(nine.predicted_overlap.value() == doctest::Approx(0.9));
  CHECK(nine.measured_overlap == doctest::Approx(0.9).epsilon(1e-9));

  // The padded history state still sits at zero energy of the padded
  // objective.
  const HistoryState hist = history_state(half.padded);
  CHECK(expected_value(hist.state, half.objective) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("clock system rejects bad weights and oversized registers") {
  Circuit c(1);
  c.add(Gate::x(0));
  CHECK_THROWS_AS(make_clock_system(c, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_clock_system(c, 1.0, -2.0), std::invalid_argument);

  Circuit wide(20);
  wide.add(Gate::x(0)).add(Gate::x(1)).add(Gate::x(2)).add(Gate::x(3));
  CHECK_THROWS_AS(make_clock_system(wide), CapExceededError);
}
