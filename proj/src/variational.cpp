// SPDX-License-Identifier: Apache-2.0

#include "vqc/variational.hpp"

#include <cmath>
#include <random>

namespace vqc {

Geometry geometry_from_name(const std::string& name) {
  if (name == "line") return Geometry::line;
  if (name == "ring") return Geometry::ring;
  if (name == "grid") return Geometry::grid;
  throw ParseError("unknown geometry '" + name + "' (line|ring|grid)");
}

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::line: return "line";
    case Geometry::ring: return "ring";
    case Geometry::grid: return "grid";
  }
  return "?";
}

namespace {

std::size_t grid_side(std::size_t n) {
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (side * side != n) {
    throw DimensionError("grid geometry requires a perfect-square qubit count, got " +
                         std::to_string(n));
  }
  return side;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> geometry_edges(Geometry g, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (n < 2) return edges;
  switch (g) {
    case Geometry::line:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Geometry::ring:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (n > 2) edges.emplace_back(n - 1, 0);  // a 2-ring is a single edge
      break;
    case Geometry::grid: {
      const std::size_t m = grid_side(n);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c + 1 < m; ++c) edges.emplace_back(r * m + c, r * m + c + 1);
      }
      for (std::size_t r = 0; r + 1 < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) edges.emplace_back(r * m + c, (r + 1) * m + c);
      }
      break;
    }
  }
  return edges;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> geometry_matchings(Geometry g,
                                                                                 std::size_t n) {
  using Edge = std::pair<std::size_t, std::size_t>;
  std::vector<std::vector<Edge>> classes;
  auto push = [&](std::vector<Edge> cls) {
    if (!cls.empty()) classes.push_back(std::move(cls));
  };
  if (n < 2) return classes;
  switch (g) {
    case Geometry::line: {
      std::vector<Edge> even, odd;
      for (std::size_t i = 0; i + 1 < n; ++i) (i % 2 ? odd : even).emplace_back(i, i + 1);
      push(std::move(even));
      push(std::move(odd));
      break;
    }
    case Geometry::ring: {
      if (n == 2) return geometry_matchings(Geometry::line, n);
      std::vector<Edge> even, odd, wrap;
      for (std::size_t i = 0; i + 1 < n; ++i) (i % 2 ? odd : even).emplace_back(i, i + 1);
      if (n % 2 == 0) {
        odd.emplace_back(n - 1, 0);
      } else {
        wrap.emplace_back(n - 1, 0);  // odd cycles need a third color
      }
      push(std::move(even));
      push(std::move(odd));
      push(std::move(wrap));
      break;
    }
    case Geometry::grid: {
      const std::size_t m = grid_side(n);
      std::vector<Edge> ha, hb, va, vb;
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c + 1 < m; ++c) {
          (c % 2 ? hb : ha).emplace_back(r * m + c, r * m + c + 1);
        }
      }
      for (std::size_t r = 0; r + 1 < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
          (r % 2 ? vb : va).emplace_back(r * m + c, (r + 1) * m + c);
        }
      }
      push(std::move(ha));
      push(std::move(hb));
      push(std::move(va));
      push(std::move(vb));
      break;
    }
  }
  return classes;
}

AnsatzFamily ansatz_family_from_name(const std::string& name) {
  if (name == "hardware_efficient") return AnsatzFamily::hardware_efficient;
  if (name == "brick_layer") return AnsatzFamily::brick_layer;
  if (name == "circuit_shaped") return AnsatzFamily::circuit_shaped;
  throw ParseError("unknown ansatz family '" + name +
                   "' (hardware_efficient|brick_layer|circuit_shaped)");
}

std::string ansatz_family_name(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::hardware_efficient: return "hardware_efficient";
    case AnsatzFamily::brick_layer: return "brick_layer";
    case AnsatzFamily::circuit_shaped: return "circuit_shaped";
  }
  return "?";
}

namespace {

const std::vector<std::pair<std::size_t, std::size_t>>& matching_for_layer(
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& classes,
    std::size_t layer) {
  return classes[(layer - 1) % classes.size()];
}

// Controlled-RY: rotate the target where the control is set. Local bit 0 is
// the control, so rows/columns 1 and 3 carry the rotation block.
void apply_cry(StateVector& s, std::size_t control, std::size_t target, double theta) {
  const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m(1, 1) = c;
  m(1, 3) = -sn;
  m(3, 1) = sn;
  m(3, 3) = c;
  s.apply_local({control, target}, m);
}

std::size_t circuit_shaped_param_count(const AnsatzSpec& spec) {
  if (!spec.circuit) throw DimensionError("circuit_shaped ansatz needs a target circuit");
  std::size_t count = 0;
  for (const Gate& g : spec.circuit->gates) {
    if (is_parameterized(g.kind)) ++count;
  }
  return count;
}

}  // namespace

std::size_t param_count(const AnsatzSpec& spec) {
  switch (spec.family) {
    case AnsatzFamily::circuit_shaped:
      return circuit_shaped_param_count(spec);
    case AnsatzFamily::hardware_efficient: {
      std::size_t count = spec.n * (spec.depth + 1);
      if (spec.depth > 0 && spec.n >= 2) {
        const auto classes = geometry_matchings(spec.geometry, spec.n);
        for (std::size_t layer = 1; layer <= spec.depth; ++layer) {
          count += matching_for_layer(classes, layer).size();
        }
      } else if (spec.geometry == Geometry::grid) {
        grid_side(spec.n);  // validate even when depth is 0
      }
      return count;
    }
    case AnsatzFamily::brick_layer: {
      std::size_t count = 0;
      if (spec.depth > 0 && spec.n >= 2) {
        const auto classes = geometry_matchings(spec.geometry, spec.n);
        for (std::size_t layer = 1; layer <= spec.depth; ++layer) {
          count += 3 * matching_for_layer(classes, layer).size();
        }
      }
      return count;
    }
  }
  throw std::logic_error("unhandled ansatz family");
}

StateVector ansatz_state(const AnsatzSpec& spec, const std::vector<double>& params) {
  if (params.size() != param_count(spec)) {
    throw DimensionError("parameter count mismatch: got " + std::to_string(params.size()) +
                         ", ansatz takes " + std::to_string(param_count(spec)));
  }
  std::size_t next = 0;
  auto take = [&]() { return params[next++]; };

  switch (spec.family) {
    case AnsatzFamily::circuit_shaped: {
      Circuit c = *spec.circuit;
      for (Gate& g : c.gates) {
        if (is_parameterized(g.kind)) g.angle = take();
      }
      return run(c);
    }
    case AnsatzFamily::hardware_efficient: {
      StateVector s = StateVector::zero_state(spec.n);
      const auto classes =
          (spec.depth > 0 && spec.n >= 2) ? geometry_matchings(spec.geometry, spec.n)
                                          : decltype(geometry_matchings(spec.geometry, spec.n)){};
      for (std::size_t q = 0; q < spec.n; ++q) s.apply_gate(Gate::ry(q, take()));
      for (std::size_t layer = 1; layer <= spec.depth; ++layer) {
        if (!classes.empty()) {
          for (const auto& [a, b] : matching_for_layer(classes, layer)) {
            apply_cry(s, a, b, take());
          }
        }
        for (std::size_t q = 0; q < spec.n; ++q) s.apply_gate(Gate::ry(q, take()));
      }
      return s;
    }
    case AnsatzFamily::brick_layer: {
      StateVector s = StateVector::zero_state(spec.n);
      if (spec.depth == 0 || spec.n < 2) return s;
      const auto classes = geometry_matchings(spec.geometry, spec.n);
      for (std::size_t layer = 1; layer <= spec.depth; ++layer) {
        for (const auto& [a, b] : matching_for_layer(classes, layer)) {
          s.apply_gate(Gate::ry(a, take()));
          s.apply_gate(Gate::ry(b, take()));
          apply_cry(s, a, b, take());
        }
      }
      return s;
    }
  }
  throw std::logic_error("unhandled ansatz family");
}

std::vector<double> initial_parameters(const AnsatzSpec& spec) {
  if (spec.family == AnsatzFamily::circuit_shaped) {
    std::vector<double> params;
    for (const Gate& g : spec.circuit->gates) {
      if (is_parameterized(g.kind)) params.push_back(g.angle);
    }
    return params;
  }
  return std::vector<double>(param_count(spec), 0.0);
}

double sampled_expected_value_fixed(const StateVector& s, const PauliSum& h,
                                    std::uint64_t shots_per_term, std::uint64_t seed) {
  if (shots_per_term == 0) return expected_value(s, h);
  double total = 0.0;
  std::size_t term_index = 0;
  for (const auto& [w, c] : h.terms()) {
    ++term_index;
    if (w.is_identity()) {
      total += c;
      continue;
    }
    Complex acc = 0.0;
    for (std::uint64_t j = 0; j < s.dim(); ++j) {
      acc += std::conj(s.amplitude(j ^ w.x_mask())) * w.basis_phase(j).value() * s.amplitude(j);
    }
    const double p = std::clamp(0.5 * (1.0 + acc.real()), 0.0, 1.0);
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * term_index));
    std::binomial_distribution<std::uint64_t> binom(shots_per_term, p);
    total += c * (2.0 * static_cast<double>(binom(rng)) /
                      static_cast<double>(shots_per_term) - 1.0);
  }
  return total;
}

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr int kGoldenIters = 14;
// A restart stops sweeping once a full pass gains less than this.
constexpr double kSweepTol = 1e-10;

struct Evaluator {
  const PauliSum& objective;
  const AnsatzSpec& spec;
  std::uint64_t shots;
  std::uint64_t seed;
  std::size_t budget;
  OptimizationRun& run;

  bool exhausted() const { return run.evaluations >= budget; }

  double operator()(const std::vector<double>& params) {
    const StateVector s = ansatz_state(spec, params);
    // Per-evaluation seed split keeps sampled runs order-independent.
    const double v = shots == 0
                         ? expected_value(s, objective)
                         : sampled_expected_value_fixed(
                               s, objective, shots,
                               seed ^ (0xd1342543de82ef95ULL * (run.evaluations + 1)));
    ++run.evaluations;
    if (v < run.best_value) {
      run.best_value = v;
      run.best_params = params;
      run.trace.emplace_back(run.evaluations, v);
    }
    return v;
  }
};

// Golden-section line search on params[i] over [center-pi, center+pi];
// returns the best point seen along the axis (including the center).
std::pair<double, double> line_search(Evaluator& eval, std::vector<double> params, std::size_t i,
                                      double f_center) {
  double best_x = params[i], best_f = f_center;
  auto probe = [&](double x) {
    params[i] = x;
    const double f = eval(params);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
    return f;
  };
  double lo = best_x - M_PI, hi = best_x + M_PI;
  double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
  double f1 = probe(x1);
  if (eval.exhausted()) return {best_x, best_f};
  double f2 = probe(x2);
  for (int it = 0; it < kGoldenIters && !eval.exhausted(); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = probe(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = probe(x2);
    }
  }
  return {best_x, best_f};
}

}  // namespace

OptimizationRun minimize(const PauliSum& objective, const AnsatzSpec& spec,
                         const MinimizeOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("minimize budget must be >= 1");
  if (!(options.threshold > 0.0)) throw std::invalid_argument("threshold must be positive");

  OptimizationRun run;
  run.threshold = options.threshold;
  run.best_value = std::numeric_limits<double>::infinity();
  Evaluator eval{objective, spec, options.shots, options.seed, options.budget, run};

  const std::size_t p = param_count(spec);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * M_PI);

  for (std::size_t restart = 0; !eval.exhausted(); ++restart) {
    std::vector<double> params;
    if (restart == 0) {
      params = initial_parameters(spec);
    } else {
      params.resize(p);
      for (double& x : params) x = uniform(rng);
    }
    double current = eval(params);
    if (p == 0) break;
    bool improving = true;
    while (improving && !eval.exhausted()) {
      const double sweep_start = current;
      for (std::size_t i = 0; i < p && !eval.exhausted(); ++i) {
        auto [x, f] = line_search(eval, params, i, current);
        if (f < current) {
          params[i] = x;
          current = f;
        }
      }
      improving = current < sweep_start - kSweepTol;
    }
  }
  run.best_params.resize(p, 0.0);
  run.accepted = run.best_value < options.threshold;
  return run;
}

double trace_of(const PauliSum& objective) {
  return std::pow(2.0, static_cast<double>(objective.n())) *
         objective.coefficient(PauliWord::identity(objective.n()));
}

WitnessReport witness_check(const PauliSum& objective, const StateVector& witness, double delta,
                            std::size_t dim_cap) {
  if (objective.n() != witness.n()) throw DimensionError("witness width mismatch");
  const SpectralReport spec = spectral_report(objective, dim_cap);

  WitnessReport report;
  report.energy = expected_value(witness, objective);
  report.accepted = report.energy < delta;
  report.gap = spec.gap;
  report.trace = trace_of(objective);
  report.ground_energy = spec.eigenvalues.front();
  report.degenerate = spec.degenerate;
  // Floating-point dust below zero is clamped before the bound formulas.
  const double energy = std::max(report.energy, 0.0);
  std::tie(report.lemma1_lower, report.lemma1_upper) =
      stability_bounds(energy, spec.gap, report.trace);
  return report;
}

WitnessReport witness_check(const PauliSum& objective, const Circuit& witness, double delta,
                            std::size_t dim_cap) {
  return witness_check(objective, run(witness), delta, dim_cap);
}

}  // namespace vqc
