// SPDX-License-Identifier: Apache-2.0

#include "vqc/arealaw.hpp"

#include <cmath>
#include <random>

namespace vqc {

std::size_t InteractionGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) count += adjacency[i][j];
  }
  return count;
}

InteractionGraph interaction_graph(const PauliSum& h) {
  InteractionGraph g;
  g.n = h.n();
  g.adjacency.assign(g.n, std::vector<std::uint8_t>(g.n, 0));
  for (const auto& [w, c] : h.terms()) {
    const std::uint64_t support = w.x_mask() | w.z_mask();
    for (std::size_t i = 0; i < g.n; ++i) {
      if (!((support >> i) & 1)) continue;
      for (std::size_t j = i + 1; j < g.n; ++j) {
        if ((support >> j) & 1) {
          g.adjacency[i][j] = 1;
          g.adjacency[j][i] = 1;
        }
      }
    }
  }
  return g;
}

std::size_t max_ebits(std::size_t n, std::size_t c) {
  if (n < 2) throw DimensionError("max_ebits needs n >= 2");
  return std::min(n / 2, c);
}

double saturating_depth(Geometry g, std::size_t n) {
  switch (g) {
    case Geometry::line: return static_cast<double>(n) / 2.0;
    case Geometry::ring: return static_cast<double>(n) / 4.0;
    case Geometry::grid: {
      const double side = std::sqrt(static_cast<double>(n));
      if (side != std::floor(side)) {
        throw DimensionError("grid geometry requires a perfect-square qubit count");
      }
      return side / 2.0;
    }
  }
  throw std::logic_error("unhandled geometry");
}

std::vector<std::size_t> all_prefix_cuts(std::size_t n) {
  std::vector<std::size_t> cuts;
  for (std::size_t p = 1; p < n; ++p) cuts.push_back(p);
  return cuts;
}

std::vector<CutEbits> measure_ebits(const AnsatzSpec& spec, const std::vector<double>& params,
                                    const std::vector<std::size_t>& cuts) {
  const StateVector s = ansatz_state(spec, params);
  std::vector<CutEbits> out;
  out.reserve(cuts.size());
  for (std::size_t p : cuts) {
    if (p == 0 || p >= spec.n) throw DimensionError("prefix cut outside 1..n-1");
    const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
    out.push_back({p, schmidt_ebits(s, mask)});
  }
  return out;
}

ArealawSweep arealaw_sweep(Geometry g, std::size_t n, std::size_t depth, std::size_t draws,
                           std::uint64_t seed, std::size_t histogram_bins) {
  AnsatzSpec spec{AnsatzFamily::hardware_efficient, n, depth, g, std::nullopt};
  const std::size_t p = param_count(spec);
  const auto cuts = all_prefix_cuts(n);

  ArealawSweep sweep;
  sweep.bound = max_ebits(n, depth);
  sweep.draws = draws;
  sweep.per_cut_max_rank.assign(cuts.size(), 0.0);
  sweep.per_cut_max_entropy.assign(cuts.size(), 0.0);
  sweep.entropy_histogram.assign(histogram_bins, 0);
  const double hist_top = std::max<double>(sweep.bound, 1);
  sweep.histogram_bin_width = hist_top / static_cast<double>(histogram_bins);

  std::uniform_real_distribution<double> uniform(0.0, 2.0 * M_PI);
  for (std::size_t draw = 0; draw < draws; ++draw) {
    // Per-draw generator so sweeps are reproducible under any scheduling.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (draw + 1)));
    std::vector<double> params(p);
    for (double& x : params) x = uniform(rng);
    const auto results = measure_ebits(spec, params, cuts);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const EbitReport& r = results[i].report;
      sweep.per_cut_max_rank[i] = std::max(sweep.per_cut_max_rank[i], r.rank_ebits);
      sweep.per_cut_max_entropy[i] = std::max(sweep.per_cut_max_entropy[i], r.entropy_ebits);
      sweep.max_rank_ebits = std::max(sweep.max_rank_ebits, r.rank_ebits);
      sweep.max_entropy_ebits = std::max(sweep.max_entropy_ebits, r.entropy_ebits);
      const auto bin = std::min(
          histogram_bins - 1,
          static_cast<std::size_t>(r.entropy_ebits / sweep.histogram_bin_width));
      ++sweep.entropy_histogram[bin];
    }
  }
  return sweep;
}

}  // namespace vqc
