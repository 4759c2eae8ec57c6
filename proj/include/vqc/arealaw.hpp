// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "vqc/pauli.hpp"
#include "vqc/simulator.hpp"
#include "vqc/variational.hpp"

namespace vqc {

/// Symmetric 0/1 adjacency with zero diagonal: edge (i,j) present iff some
/// term acts non-identically on both qubits.
struct InteractionGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> adjacency;

  std::size_t edge_count() const;
};

InteractionGraph interaction_graph(const PauliSum& h);

/// The ebit ceiling min{floor(n/2), c} for a depth-c entangling ansatz.
std::size_t max_ebits(std::size_t n, std::size_t c);

/// Minimal depth possibly saturating bipartite entanglement:
/// line -> n/2, ring -> n/4, grid -> sqrt(n)/2.
double saturating_depth(Geometry g, std::size_t n);

struct CutEbits {
  std::size_t cut = 0;  // prefix cut position p: {0..p-1} | {p..n-1}
  EbitReport report;
};

/// Schmidt data of the ansatz state across each listed prefix cut.
std::vector<CutEbits> measure_ebits(const AnsatzSpec& spec, const std::vector<double>& params,
                                    const std::vector<std::size_t>& cuts);

/// All nontrivial prefix cuts 1..n-1.
std::vector<std::size_t> all_prefix_cuts(std::size_t n);

struct ArealawSweep {
  std::size_t bound = 0;  // max_ebits(n, depth)
  std::size_t draws = 0;
  double max_rank_ebits = 0.0;
  double max_entropy_ebits = 0.0;
  std::vector<double> per_cut_max_rank;     // indexed by cut-1
  std::vector<double> per_cut_max_entropy;  // indexed by cut-1
  std::vector<std::size_t> entropy_histogram;  // uniform bins over [0, bound]
  double histogram_bin_width = 0.0;
};

/// Random-parameter Monte Carlo sweep of the hardware-efficient ansatz: the
/// ceiling is checked hard by callers; saturation statistics are informative.
ArealawSweep arealaw_sweep(Geometry g, std::size_t n, std::size_t depth, std::size_t draws,
                           std::uint64_t seed, std::size_t histogram_bins = 20);

}  // namespace vqc
