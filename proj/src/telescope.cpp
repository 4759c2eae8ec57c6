// SPDX-License-Identifier: Apache-2.0

#include "vqc/telescope.hpp"

#include <cmath>

namespace vqc {

PauliSum initial_hamiltonian(std::size_t n, const std::vector<Gate>& product_map) {
  if (n < 1) throw DimensionError("initial_hamiltonian needs n >= 1");
  PauliSum h(n);
  h.add_term(PauliWord::identity(n), n / 2.0);
  for (std::size_t q = 0; q < n; ++q) {
    h.add_term(PauliWord::single(n, q, Letter::Z), -0.5);
  }
  for (const Gate& g : product_map) {
    if (g.arity() != 1) {
      throw DimensionError("initial product map must contain single-qubit gates only");
    }
    h = conjugate_unitary(h, g);
  }
  return h;
}

TelescopeObjective::TelescopeObjective(Circuit circuit, std::vector<Gate> product_map,
                                       std::size_t cardinality_budget)
    : circuit_(std::move(circuit)),
      map_(std::move(product_map)),
      h_(initial_hamiltonian(circuit_.n, map_)),
      budget_(cardinality_budget) {}

void TelescopeObjective::extend() {
  if (k_ >= circuit_.size()) throw std::out_of_range("telescope: circuit exhausted");
  h_ = conjugate_unitary(h_, circuit_.gates[k_]);
  ++k_;
  if (h_.cardinality() > budget_) {
    throw CapExceededError("telescope cardinality " + std::to_string(h_.cardinality()) +
                           " breached budget " + std::to_string(budget_) + " at gate " +
                           std::to_string(k_));
  }
}

void TelescopeObjective::extend_all() {
  while (k_ < circuit_.size()) extend();
}

StateVector TelescopeObjective::prefix_state() const {
  StateVector s = StateVector::zero_state(circuit_.n);
  for (const Gate& g : map_) s.apply_gate(g);
  for (std::size_t i = 0; i < k_; ++i) s.apply_gate(circuit_.gates[i]);
  return s;
}

TelescopeCertificate certify(const TelescopeObjective& t, std::size_t dim_cap) {
  const SpectralReport spec = spectral_report(t.hamiltonian(), dim_cap);
  if (spec.degenerate) {
    throw CertificationError("telescope objective has a degenerate ground space");
  }
  const StateVector output = t.prefix_state();

  TelescopeCertificate cert;
  cert.k = t.k();
  cert.cardinality = t.cardinality();
  cert.eigenvalues = spec.eigenvalues;
  cert.gap = spec.gap;
  cert.ground_overlap = spec.ground_vector.overlap2(output);
  cert.circuit_energy = expected_value(output, t.hamiltonian());
  const double energy = std::max(cert.circuit_energy, 0.0);
  const double trace = std::pow(2.0, static_cast<double>(t.hamiltonian().n())) *
                       t.hamiltonian().coefficient(PauliWord::identity(t.hamiltonian().n()));
  std::tie(cert.lemma1_lower, cert.lemma1_upper) = stability_bounds(energy, spec.gap, trace);
  return cert;
}

BudgetForecast budget_check(const Circuit& c, std::size_t max_cardinality) {
  BudgetForecast forecast;
  forecast.initial_cardinality = c.n + 1;
  double bound = static_cast<double>(c.n + 1);
  for (const Gate& g : c.gates) {
    if (!is_clifford(g.kind)) {
      bound *= std::pow(16.0, static_cast<double>(g.arity()));
    }
    // Any objective lives inside the 4^n-dimensional Pauli basis.
    bound = std::min(bound, std::pow(4.0, static_cast<double>(c.n)));
  }
  forecast.bound = bound;
  forecast.within_budget = bound <= static_cast<double>(max_cardinality);
  return forecast;
}

}  // namespace vqc
