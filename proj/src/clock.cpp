// SPDX-License-Identifier: Apache-2.0

#include "vqc/clock.hpp"

#include <bit>
#include <cmath>

namespace vqc {

std::size_t clock_qubit_count(std::size_t num_gates) {
  std::size_t nc = 0;
  while ((std::size_t{1} << nc) < num_gates + 1) ++nc;
  return nc;
}

PauliSum clock_projector(const std::string& bits) {
  const std::size_t nc = bits.size();
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < nc; ++i) {
    if (bits[i] == '1') {
      value |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw ParseError("clock projector bit string must be over {0,1}");
    }
  }
  return clock_projector(value, nc);
}

PauliSum clock_projector(std::uint64_t value, std::size_t clock_qubits) {
  if (clock_qubits < 64 && (value >> clock_qubits) != 0) {
    throw DimensionError("clock value does not fit the clock register");
  }
  PauliSum p(clock_qubits);
  const double scale = std::pow(0.5, static_cast<double>(clock_qubits));
  const std::uint64_t dim = std::uint64_t{1} << clock_qubits;
  // |x><x| = prod_i (I + (-1)^{x_i} Z_i)/2 = sum_S 2^{-nc} (-1)^{|S & x|} Z^S
  for (std::uint64_t mask = 0; mask < dim; ++mask) {
    const double sign = (std::popcount(mask & value) % 2 == 0) ? 1.0 : -1.0;
    p.add_term(PauliWord(clock_qubits, 0, mask), sign * scale);
  }
  return p;
}

namespace {

struct LadderFactor {
  // |a><b| on one qubit as two weighted letters.
  Letter l1, l2;
  Complex c1, c2;
};

LadderFactor ladder(int a, int b) {
  const Complex half(0.5, 0.0);
  const Complex ihalf(0.0, 0.5);
  if (a == 0 && b == 0) return {Letter::I, Letter::Z, half, half};
  if (a == 1 && b == 1) return {Letter::I, Letter::Z, half, -half};
  if (a == 0 && b == 1) return {Letter::X, Letter::Y, half, ihalf};
  return {Letter::X, Letter::Y, half, -ihalf};  // |1><0|
}

// Complex expansion of |t><s| over the clock qubits.
std::vector<std::pair<PauliWord, Complex>> ketbra(std::uint64_t t, std::uint64_t s,
                                                  std::size_t nc) {
  std::vector<std::pair<PauliWord, Complex>> terms{{PauliWord::identity(0), Complex(1.0, 0.0)}};
  for (std::size_t i = 0; i < nc; ++i) {
    const LadderFactor f = ladder((t >> i) & 1, (s >> i) & 1);
    std::vector<std::pair<PauliWord, Complex>> next;
    next.reserve(terms.size() * 2);
    for (const auto& [w, c] : terms) {
      PauliWord w1(i + 1, w.x_mask(), w.z_mask());
      w1.set_letter(i, f.l1);
      next.emplace_back(w1, c * f.c1);
      PauliWord w2(i + 1, w.x_mask(), w.z_mask());
      w2.set_letter(i, f.l2);
      next.emplace_back(w2, c * f.c2);
    }
    terms = std::move(next);
  }
  return terms;
}

}  // namespace

PauliSum transition_operator(std::size_t t, std::size_t clock_qubits) {
  if (t < 1 || (clock_qubits < 64 && t >= (std::size_t{1} << clock_qubits))) {
    throw DimensionError("transition step " + std::to_string(t) +
                         " outside the clock register");
  }
  PauliSum out(clock_qubits);
  // |t><t-1| + h.c.: words are Hermitian, so the sum keeps 2 Re(c) per word.
  for (const auto& [w, c] : ketbra(t, t - 1, clock_qubits)) {
    const double re = 2.0 * c.real();
    if (std::abs(re) > kPruneTol) out.add_term(w, re);
  }
  return out;
}

PauliSum gate_pauli_expansion(const Gate& g, std::size_t n) {
  const auto qs = g.qubit_span();
  for (std::size_t q : qs) {
    if (q >= n) throw DimensionError("gate qubit outside register width");
  }
  const std::size_t k = qs.size();
  const std::size_t dim = std::size_t{1} << k;
  const Eigen::MatrixXcd m = dense_matrix(g);
  PauliSum out(n);
  for (std::uint32_t p = 0; p < dim * dim; ++p) {
    PauliWord local(k, p & (dim - 1), p >> k);
    Complex tr = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
      tr += local.basis_phase(j).value() * m(j, j ^ local.x_mask());
    }
    const Complex coeff = tr / static_cast<double>(dim);
    if (std::abs(coeff.imag()) > kHermTol) {
      throw ClassificationError("gate " + gate_name(g.kind) +
                                " is not Hermitian; compile to self-inverse gates first");
    }
    if (std::abs(coeff.real()) <= kPruneTol) continue;
    PauliWord w(n);
    for (std::size_t i = 0; i < k; ++i) w.set_letter(qs[i], local.letter(i));
    out.add_term(w, coeff.real());
  }
  return out;
}

ClockSystem make_clock_system(const Circuit& circuit, double J, double K_weight,
                              std::size_t padding, std::vector<Gate> input_map) {
  if (!(J > 0.0) || !(K_weight > 0.0)) {
    throw std::invalid_argument("clock weights J and K must be positive");
  }
  for (const Gate& g : input_map) {
    if (g.arity() != 1) throw DimensionError("input map must contain single-qubit gates only");
  }
  ClockSystem sys;
  sys.register_circuit = all_self_inverse(circuit) ? circuit : compile_self_inverse(circuit);
  for (std::size_t i = 0; i < padding; ++i) sys.register_circuit.add(Gate::i(0));
  sys.n = circuit.n;
  sys.clock_qubits = clock_qubit_count(sys.register_circuit.size());
  sys.J = J;
  sys.K_weight = K_weight;
  sys.padding = padding;
  sys.input_map = std::move(input_map);
  if (sys.total_qubits() > kStateQubitCap) {
    throw CapExceededError("clock system needs " + std::to_string(sys.total_qubits()) +
                           " qubits, cap is " + std::to_string(kStateQubitCap));
  }
  return sys;
}

PauliSum build_h_prop(const Circuit& register_circuit, std::size_t clock_qubits) {
  if (!all_self_inverse(register_circuit)) {
    throw ClassificationError("build_h_prop requires a self-inverse-compiled circuit");
  }
  const std::size_t n = register_circuit.n;
  const std::size_t L = register_circuit.size();
  PauliSum h(n + clock_qubits);
  const PauliSum reg_identity = PauliSum::identity(n);
  for (std::size_t t = 1; t <= L; ++t) {
    const PauliSum proj =
        clock_projector(t, clock_qubits) + clock_projector(t - 1, clock_qubits);
    const PauliSum u = gate_pauli_expansion(register_circuit.gates[t - 1], n);
    h += 0.5 * tensor(reg_identity, proj);
    h -= 0.5 * tensor(u, transition_operator(t, clock_qubits));
  }
  return h;
}

PauliSum build_h_in(std::size_t n, const std::vector<Gate>& input_map,
                    std::size_t clock_qubits) {
  PauliSum penalty(n);
  penalty.add_term(PauliWord::identity(n), n / 2.0);
  for (std::size_t q = 0; q < n; ++q) penalty.add_term(PauliWord::single(n, q, Letter::Z), -0.5);
  for (const Gate& g : input_map) {
    if (g.arity() != 1) throw DimensionError("input map must contain single-qubit gates only");
    penalty = conjugate_unitary(penalty, g);
  }
  return tensor(penalty, clock_projector(0, clock_qubits));
}

PauliSum spectator_projector(std::size_t num_gates, std::size_t clock_qubits) {
  PauliSum p = PauliSum::identity(clock_qubits);
  for (std::size_t t = 0; t <= num_gates; ++t) p -= clock_projector(t, clock_qubits);
  return p;
}

PauliSum build_objective(const ClockSystem& sys) {
  PauliSum h = sys.J * build_h_in(sys.n, sys.input_map, sys.clock_qubits);
  h += sys.K_weight * build_h_prop(sys.register_circuit, sys.clock_qubits);
  PauliSum spect = spectator_projector(sys.num_gates(), sys.clock_qubits);
  if (spect.cardinality() > 0) {
    h += (sys.J + 2.0 * sys.K_weight) * tensor(PauliSum::identity(sys.n), spect);
  }
  return h;
}

HistoryState history_state(const ClockSystem& sys) {
  const std::size_t L = sys.num_gates();
  const std::size_t total = sys.total_qubits();
  StateVector reg = StateVector::zero_state(sys.n);
  for (const Gate& g : sys.input_map) reg.apply_gate(g);

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(std::int64_t{1} << total);
  const double weight = 1.0 / std::sqrt(static_cast<double>(L + 1));
  for (std::size_t t = 0; t <= L; ++t) {
    if (t > 0) reg.apply_gate(sys.register_circuit.gates[t - 1]);
    for (std::uint64_t r = 0; r < reg.dim(); ++r) {
      amps(static_cast<Eigen::Index>(r | (static_cast<std::uint64_t>(t) << sys.n))) =
          weight * reg.amplitude(r);
    }
  }
  return HistoryState{StateVector(total, std::move(amps)), L};
}

double gap_lower_bound(std::size_t num_gates, double J, double K_weight) {
  if (!(J > 0.0) || !(K_weight > 0.0)) {
    throw std::invalid_argument("gap_lower_bound needs positive weights");
  }
  const double L = static_cast<double>(num_gates);
  return std::max(J, K_weight * M_PI * M_PI / (2.0 * (L + 1.0) * (L + 1.0)));
}

PadReport pad_and_project(const ClockSystem& sys, std::size_t k_pad) {
  // Rebuild from the unpadded prefix so K_pad always counts from the
  // original circuit length.
  Circuit base = sys.register_circuit;
  base.gates.resize(base.gates.size() - sys.padding);
  const std::size_t L = base.size();

  PadReport report{make_clock_system(base, sys.J, sys.K_weight, k_pad, sys.input_map),
                   PauliSum{}, std::nullopt, 0.0};
  report.objective = build_objective(report.padded);
  if (k_pad > 0) {
    report.predicted_overlap =
        1.0 / (1.0 + static_cast<double>(L + 1) / static_cast<double>(k_pad));
  }

  const HistoryState hist = history_state(report.padded);
  StateVector output = StateVector::zero_state(sys.n);
  for (const Gate& g : sys.input_map) output.apply_gate(g);
  for (std::size_t i = 0; i < L; ++i) output.apply_gate(base.gates[i]);

  // Overlap with output (x) clock window {L .. L+K_pad-1} ({L} when K_pad=0).
  const std::size_t t_end = k_pad > 0 ? L + k_pad - 1 : L;
  double measured = 0.0;
  for (std::size_t t = L; t <= t_end; ++t) {
    Complex amp = 0.0;
    for (std::uint64_t r = 0; r < output.dim(); ++r) {
      amp += std::conj(output.amplitude(r)) *
             hist.state.amplitude(r | (static_cast<std::uint64_t>(t) << sys.n));
    }
    measured += std::norm(amp);
  }
  report.measured_overlap = measured;
  return report;
}

ClockCertificate certify_clock(const ClockSystem& sys, std::size_t dim_cap) {
  const PauliSum h = build_objective(sys);
  const SpectralReport spec = spectral_report(h, dim_cap);
  const HistoryState hist = history_state(sys);

  ClockCertificate cert;
  cert.L = sys.num_gates();
  cert.clock_qubits = sys.clock_qubits;
  cert.cardinality = h.cardinality();
  cert.gap = spec.gap;
  cert.gap_bound = gap_lower_bound(sys.num_gates(), sys.J, sys.K_weight);
  cert.bound_violated = spec.gap < cert.gap_bound - 1e-9;
  cert.ground_energy = spec.eigenvalues.front();
  cert.degenerate = spec.degenerate;
  cert.ground_overlap_with_history = spec.ground_vector.overlap2(hist.state);
  cert.history_energy = expected_value(hist.state, h);
  return cert;
}

}  // namespace vqc
