// SPDX-License-Identifier: Apache-2.0

#include "vqc/variational.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vqc/clock.hpp"
#include "vqc/telescope.hpp"

using namespace vqc;

TEST_CASE("geometry matchings cover every edge exactly once") {
  for (Geometry g : {Geometry::line, Geometry::ring}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto edges = geometry_edges(g, n);
      const auto classes = geometry_matchings(g, n);
      std::size_t total = 0;
      for (const auto& cls : classes) {
        total += cls.size();
        // A matching never touches a qubit twice.
        std::vector<int> used(n, 0);
        for (const auto& [a, b] : cls) {
          CHECK(!used[a]);
          CHECK(!used[b]);
          used[a] = used[b] = 1;
        }
      }
      CHECK(total == edges.size());
    }
  }
  const auto grid = geometry_matchings(Geometry::grid, 4);
  CHECK(geometry_edges(Geometry::grid, 4).size() == 4);
  CHECK(grid.size() == 2);  // 2x2: one horizontal and one vertical matching
  CHECK_THROWS_AS(geometry_edges(Geometry::grid, 6), DimensionError);
}

TEST_CASE("param_count is the documented deterministic function") {
  // hardware_efficient: n(c+1) single-qubit + sum of matching sizes.
  AnsatzSpec he{AnsatzFamily::hardware_efficient, 4, 3, Geometry::line, std::nullopt};
  // line n=4 matchings: {(0,1),(2,3)}, {(1,2)} -> layers 1..3 = 2+1+2.
  CHECK(param_count(he) == 4 * 4 + 5);

  AnsatzSpec ring{AnsatzFamily::hardware_efficient, 6, 2, Geometry::ring, std::nullopt};
  CHECK(param_count(ring) == 6 * 3 + 3 + 3);

  AnsatzSpec depth0{AnsatzFamily::hardware_efficient, 5, 0, Geometry::line, std::nullopt};
  CHECK(param_count(depth0) == 5);

  AnsatzSpec brick{AnsatzFamily::brick_layer, 4, 2, Geometry::line, std::nullopt};
  CHECK(param_count(brick) == 3 * (2 + 1));

  AnsatzSpec bad_grid{AnsatzFamily::hardware_efficient, 6, 1, Geometry::grid, std::nullopt};
  CHECK_THROWS_AS(param_count(bad_grid), DimensionError);

  Circuit c(2);
  c.add(Gate::h(0)).add(Gate::ry(0, 0.5)).add(Gate::rz(1, 0.25)).add(Gate::cnot(0, 1));
  AnsatzSpec shaped{AnsatzFamily::circuit_shaped, 2, 0, Geometry::line, c};
  CHECK(param_count(shaped) == 2);
}

TEST_CASE("ansatz_state: zero parameters prepare |0...0>") {
  for (AnsatzFamily f : {AnsatzFamily::hardware_efficient, AnsatzFamily::brick_layer}) {
    AnsatzSpec spec{f, 3, 2, Geometry::line, std::nullopt};
    const StateVector s = ansatz_state(spec, std::vector<double>(param_count(spec), 0.0));
    CHECK(s.overlap2(StateVector::zero_state(3)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ansatz_state rejects wrong parameter counts") {
  AnsatzSpec spec{AnsatzFamily::hardware_efficient, 3, 1, Geometry::line, std::nullopt};
  CHECK_THROWS_AS(ansatz_state(spec, {0.0}), DimensionError);
}

TEST_CASE("circuit_shaped ansatz reproduces the target circuit at its own angles") {
  std::mt19937_64 rng(3);
  const Circuit c = oracle::random_circuit(3, 10, 4, rng);
  AnsatzSpec spec{AnsatzFamily::circuit_shaped, 3, 0, Geometry::line, c};
  const StateVector s = ansatz_state(spec, initial_parameters(spec));
  CHECK(s.overlap2(run(c)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ring depth-1 states stay below one ebit across prefix cuts") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  AnsatzSpec spec{AnsatzFamily::hardware_efficient, 4, 1, Geometry::ring, std::nullopt};
  for (int draw = 0; draw < 100; ++draw) {
    std::vector<double> params(param_count(spec));
    for (double& x : params) x = angle(rng);
    const StateVector s = ansatz_state(spec, params);
    for (std::size_t p = 1; p < 4; ++p) {
      const EbitReport r = schmidt_ebits(s, (std::uint64_t{1} << p) - 1);
      CHECK(r.rank_ebits <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("minimize: trivial telescope accepted immediately") {
  const PauliSum objective = initial_hamiltonian(2);
  Circuit empty(2);
  AnsatzSpec spec{AnsatzFamily::circuit_shaped, 2, 0, Geometry::line, empty};
  MinimizeOptions opt;
  opt.threshold = 1.0;
  opt.budget = 10;
  const OptimizationRun result = minimize(objective, spec, opt);
  CHECK(result.accepted);
  CHECK(result.best_value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(result.evaluations >= 1);
}

TEST_CASE("minimize: bell telescope accepts from the circuit's own seed") {
  Circuit bell(2);
  bell.add(Gate::h(0)).add(Gate::cnot(0, 1));
  TelescopeObjective t(bell);
  t.extend_all();
  AnsatzSpec spec{AnsatzFamily::circuit_shaped, 2, 0, Geometry::line, bell};
  MinimizeOptions opt;
  opt.threshold = 1.0;
  opt.budget = 5;
  const OptimizationRun result = minimize(t.hamiltonian(), spec, opt);
  CHECK(result.accepted);
  CHECK(result.best_value <= 1e-9);
}

TEST_CASE("minimize is deterministic and respects its budget") {
  std::mt19937_64 rng(7);
  const PauliSum objective = oracle::random_sum(3, 8, rng);
  AnsatzSpec spec{AnsatzFamily::hardware_efficient, 3, 2, Geometry::line, std::nullopt};
  MinimizeOptions opt;
  opt.threshold = 0.5;
  opt.budget = 400;
  opt.seed = 12345;
  const OptimizationRun a = minimize(objective, spec, opt);
  const OptimizationRun b = minimize(objective, spec, opt);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_params == b.best_params);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.trace == b.trace);
  CHECK(a.evaluations <= 400);
  CHECK(a.accepted == (a.best_value < 0.5));

  MinimizeOptions bad = opt;
  bad.budget = 0;
  CHECK_THROWS_AS(minimize(objective, spec, bad), std::invalid_argument);
}

TEST_CASE("minimize with shots stays deterministic per seed") {
  const PauliSum objective = initial_hamiltonian(2);
  AnsatzSpec spec{AnsatzFamily::hardware_efficient, 2, 1, Geometry::line, std::nullopt};
  MinimizeOptions opt;
  opt.threshold = 1.0;
  opt.budget = 120;
  opt.seed = 9;
  opt.shots = 256;
  const OptimizationRun a = minimize(objective, spec, opt);
  const OptimizationRun b = minimize(objective, spec, opt);
  CHECK(a.best_value == b.best_value);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("minimize never reports energies below the certified ground energy") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    const PauliSum objective = oracle::random_sum(2, 6, rng);
    const double ground = spectral_report(objective).eigenvalues.front();
    AnsatzSpec spec{AnsatzFamily::hardware_efficient, 2, 2, Geometry::line, std::nullopt};
    MinimizeOptions opt;
    opt.threshold = 10.0;
    opt.budget = 600;
    opt.seed = trial;
    const OptimizationRun result = minimize(objective, spec, opt);
    CHECK(result.best_value >= ground - 1e-9);
  }
}

TEST_CASE("lemma 1 applied to accepted minimizations") {
  Circuit bell(2);
  bell.add(Gate::h(0)).add(Gate::cnot(0, 1));
  TelescopeObjective t(bell);
  t.extend_all();
  AnsatzSpec spec{AnsatzFamily::hardware_efficient, 2, 1, Geometry::line, std::nullopt};
  MinimizeOptions opt;
  opt.threshold = 1.0;
  opt.budget = 2000;
  opt.seed = 3;
  const OptimizationRun result = minimize(t.hamiltonian(), spec, opt);
  REQUIRE(result.accepted);
  const SpectralReport spec_report = spectral_report(t.hamiltonian());
  const StateVector best = ansatz_state(spec, result.best_params);
  const double overlap = best.overlap2(spec_report.ground_vector);
  CHECK(overlap >= 1.0 - result.best_value / spec_report.gap - 1e-9);
}

TEST_CASE("witness_check: telescope with its own circuit and with excited states") {
  Circuit bell(2);
  bell.add(Gate::h(0)).add(Gate::cnot(0, 1));
  TelescopeObjective t(bell);
  t.extend_all();

  const WitnessReport own = witness_check(t.hamiltonian(), bell, 1.0);
  CHECK(own.energy == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(own.accepted);
  CHECK(own.lemma1_lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(own.lemma1_upper == doctest::Approx(1.0).epsilon(1e-9));

  // Orthogonal excited witnesses: the image of |01> sits at energy 1, the
  // image of |11> at energy 2 (clearly rejected at delta = 1).
  StateVector x = StateVector::basis_state(2, 1);
  for (const Gate& g : bell.gates) x.apply_gate(g);
  const WitnessReport excited = witness_check(t.hamiltonian(), x, 1.0);
  CHECK(excited.energy == doctest::Approx(1.0).epsilon(1e-9));

  StateVector xx = StateVector::basis_state(2, 3);
  for (const Gate& g : bell.gates) xx.apply_gate(g);
  const WitnessReport doubly = witness_check(t.hamiltonian(), xx, 1.0);
  CHECK(doubly.energy == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_FALSE(doubly.accepted);

  CHECK_THROWS_AS(witness_check(t.hamiltonian(), StateVector::zero_state(3), 1.0),
                  DimensionError);
}

TEST_CASE("witness_check: clock objective accepts its history state") {
  Circuit c(1);
  c.add(Gate::x(0)).add(Gate::h(0));
  const ClockSystem sys = make_clock_system(c);
  const PauliSum objective = build_objective(sys);
  const HistoryState hist = history_state(sys);
  const WitnessReport report = witness_check(objective, hist.state, 0.1);
  CHECK(report.energy == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(report.accepted);
}

TEST_CASE("trace_of matches the dense trace") {
  const PauliSum eq7 = initial_hamiltonian(2);
  CHECK(trace_of(eq7) == doctest::Approx(4.0));

  PauliSum x(3);
  x.add_term(PauliWord::from_string("XIZ"), 2.0);
  CHECK(trace_of(x) == doctest::Approx(0.0));

  Circuit c(1);
  c.add(Gate::x(0)).add(Gate::h(0));
  const PauliSum clock = build_objective(make_clock_system(c, 1.3, 0.7));
  CHECK(trace_of(clock) ==
        doctest::Approx(oracle::sum_matrix(clock).trace().real()).epsilon(1e-9));
}
