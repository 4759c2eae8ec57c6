// SPDX-License-Identifier: Apache-2.0

#include "vqc/simulator.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace vqc {

StateVector::StateVector(std::size_t n) : n_(n) {
  if (n > kStateQubitCap) {
    throw CapExceededError("statevector width " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kStateQubitCap));
  }
  amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim()));
  amps_(0) = 1.0;
}

StateVector::StateVector(std::size_t n, Eigen::VectorXcd amplitudes) : n_(n) {
  if (n > kStateQubitCap) {
    throw CapExceededError("statevector width " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kStateQubitCap));
  }
  if (amplitudes.size() != static_cast<Eigen::Index>(dim())) {
    throw DimensionError("amplitude vector has wrong dimension");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-10) {
    throw DimensionError("state vector is not normalized");
  }
  amps_ = std::move(amplitudes);
}

StateVector StateVector::zero_state(std::size_t n) { return StateVector(n); }

StateVector StateVector::basis_state(std::size_t n, std::uint64_t index) {
  StateVector s(n);
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

void StateVector::apply_gate(const Gate& g) { apply_local(g.qubit_span(), dense_matrix(g)); }

void StateVector::apply_local(const std::vector<std::size_t>& qs, const Eigen::MatrixXcd& m) {
  for (std::size_t q : qs) {
    if (q >= n_) throw DimensionError("gate qubit outside state width");
  }
  const std::size_t k = qs.size();
  if (k > 3 || m.rows() != (1 << k) || m.cols() != (1 << k)) {
    throw DimensionError("apply_local supports 1-3 qubit unitaries");
  }
  const std::size_t block = std::size_t{1} << k;

  // Iterate over all assignments of the non-support bits, gathering the
  // 2^k amplitudes addressed by the support bits.
  std::uint64_t support = 0;
  for (std::size_t q : qs) support |= std::uint64_t{1} << q;
  std::array<Complex, 8> in, out;
  std::array<std::uint64_t, 8> idx;
  for (std::uint64_t base = 0; base < dim(); ++base) {
    if (base & support) continue;
    for (std::uint64_t p = 0; p < block; ++p) {
      std::uint64_t j = base;
      for (std::size_t i = 0; i < k; ++i) {
        if ((p >> i) & 1) j |= std::uint64_t{1} << qs[i];
      }
      idx[p] = j;
      in[p] = amps_(static_cast<Eigen::Index>(j));
    }
    for (std::uint64_t r = 0; r < block; ++r) {
      Complex acc = 0.0;
      for (std::uint64_t cCol = 0; cCol < block; ++cCol) acc += m(r, cCol) * in[cCol];
      out[r] = acc;
    }
    for (std::uint64_t p = 0; p < block; ++p) {
      amps_(static_cast<Eigen::Index>(idx[p])) = out[p];
    }
  }
}

Complex StateVector::inner(const StateVector& other) const {
  if (n_ != other.n_) throw DimensionError("inner product widths differ");
  return amps_.dot(other.amps_);  // conjugates *this
}

double StateVector::overlap2(const StateVector& other) const { return std::norm(inner(other)); }

StateVector run(const Circuit& c, const StateVector& input) {
  if (c.n != input.n()) throw DimensionError("circuit/state widths differ");
  StateVector s = input;
  for (const Gate& g : c.gates) s.apply_gate(g);
  return s;
}

StateVector run(const Circuit& c) { return run(c, StateVector::zero_state(c.n)); }

namespace {

double word_expectation(const StateVector& s, const PauliWord& w) {
  const std::uint64_t dim = std::uint64_t{1} << s.n();
  Complex acc = 0.0;
  for (std::uint64_t j = 0; j < dim; ++j) {
    // <s|W|s> = sum_j conj(a[j^x]) phase(j) a[j]
    acc += std::conj(s.amplitude(j ^ w.x_mask())) * w.basis_phase(j).value() * s.amplitude(j);
  }
  return acc.real();
}

}  // namespace

double expected_value(const StateVector& s, const PauliSum& h) {
  if (s.n() != h.n()) throw DimensionError("expected_value widths differ");
  double total = 0.0;
  for (const auto& [w, c] : h.terms()) total += c * word_expectation(s, w);
  return total;
}

std::vector<std::uint64_t> shot_plan(const PauliSum& h, double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  const double m = static_cast<double>(h.cardinality());
  std::vector<std::uint64_t> plan;
  plan.reserve(h.cardinality());
  const double log_term = std::log(2.0 * m / delta);
  for (const auto& [w, c] : h.terms()) {
    if (w.is_identity()) {
      plan.push_back(1);  // deterministic outcome
      continue;
    }
    const double n = std::ceil(2.0 * log_term * std::pow(m * std::abs(c) / epsilon, 2.0));
    plan.push_back(static_cast<std::uint64_t>(n));
  }
  return plan;
}

double sampled_expected_value(const StateVector& s, const PauliSum& h, double epsilon,
                              double delta, std::uint64_t seed) {
  if (s.n() != h.n()) throw DimensionError("sampled_expected_value widths differ");
  const auto plan = shot_plan(h, epsilon, delta);
  double total = 0.0;
  std::size_t term_index = 0;
  for (const auto& [w, c] : h.terms()) {
    const std::uint64_t shots = plan[term_index++];
    if (w.is_identity()) {
      total += c;
      continue;
    }
    // Each shot is a +-1 eigenvalue draw; P(+1) = (1 + <W>)/2. Sampling the
    // count through a binomial keeps the cost independent of the shot budget.
    const double mean = word_expectation(s, w);
    const double p = std::clamp(0.5 * (1.0 + mean), 0.0, 1.0);
    // Split the seed per term so evaluation order cannot matter.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (term_index + 1)));
    std::binomial_distribution<std::uint64_t> binom(shots, p);
    const double up = static_cast<double>(binom(rng));
    total += c * (2.0 * up / static_cast<double>(shots) - 1.0);
  }
  return total;
}

double dispersion(const StateVector& s, const PauliSum& h) {
  const double mean = expected_value(s, h);
  const double second = expected_value(s, square(h));
  return second - mean * mean;
}

SpectralReport spectral_report(const PauliSum& h, std::size_t dim_cap) {
  const std::size_t dim = std::size_t{1} << h.n();
  if (dim > dim_cap) {
    throw CapExceededError("eigensolver dimension " + std::to_string(dim) + " exceeds cap " +
                           std::to_string(dim_cap));
  }
  const Eigen::MatrixXcd m = to_dense(h, h.n());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

  SpectralReport report{.eigenvalues = {},
                        .gap = 0.0,
                        .ground_vector = StateVector(h.n()),
                        .degenerate = false,
                        .ground_residual = 0.0};
  report.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
  Eigen::VectorXcd v0 = solver.eigenvectors().col(0);
  report.ground_vector = StateVector(h.n(), v0 / v0.norm());
  if (dim > 1) {
    report.gap = report.eigenvalues[1] - report.eigenvalues[0];
    report.degenerate = report.gap < kDegeneracyTol;
  }
  report.ground_residual = (m * v0 - report.eigenvalues[0] * v0).norm();
  return report;
}

std::pair<double, double> stability_bounds(double energy, double gap, double trace) {
  if (!(gap > 0.0)) throw std::invalid_argument("stability_bounds: gap must be positive");
  if (!(trace > 0.0)) throw std::invalid_argument("stability_bounds: trace must be positive");
  if (energy < 0.0) throw std::invalid_argument("stability_bounds: energy must be non-negative");
  return {1.0 - energy / gap, 1.0 - energy / trace};
}

EbitReport schmidt_ebits(const StateVector& s, std::uint64_t cut_mask) {
  const std::uint64_t all = (s.n() == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << s.n()) - 1);
  cut_mask &= all;
  if (cut_mask == 0 || cut_mask == all) throw DimensionError("schmidt_ebits: trivial bipartition");

  const int rows_bits = std::popcount(cut_mask);
  const int cols_bits = static_cast<int>(s.n()) - rows_bits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(std::int64_t{1} << rows_bits,
                                              std::int64_t{1} << cols_bits);
  for (std::uint64_t j = 0; j < s.dim(); ++j) {
    std::uint64_t r = 0, c = 0;
    int ri = 0, ci = 0;
    for (std::size_t q = 0; q < s.n(); ++q) {
      const std::uint64_t bit = (j >> q) & 1;
      if ((cut_mask >> q) & 1) {
        r |= bit << ri++;
      } else {
        c |= bit << ci++;
      }
    }
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s.amplitude(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();

  EbitReport report;
  int rank = 0;
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kSchmidtTol) {
      ++rank;
      const double p = sv(i) * sv(i);
      entropy -= p * std::log2(p);
    }
  }
  report.rank_ebits = rank > 0 ? std::log2(static_cast<double>(rank)) : 0.0;
  report.entropy_ebits = std::max(entropy, 0.0);
  return report;
}

}  // namespace vqc
