// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vqc/gates.hpp"

namespace vqc {

/// Ordered gate list over a fixed width. Gates apply in list order.
struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;
  std::string name;

  Circuit() = default;
  explicit Circuit(std::size_t width, std::string label = {}) : n(width), name(std::move(label)) {}

  Circuit& add(const Gate& g);
  std::size_t size() const { return gates.size(); }

  bool operator==(const Circuit& other) const {
    return n == other.n && gates == other.gates;
  }
};

/// File format: one `NAME q0 [q1 [q2]] [angle]` per line, '#' comments,
/// blank lines ignored. Width is inferred as max index + 1 unless a
/// `# n=<width>` header is present.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);
Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

std::size_t non_clifford_count(const Circuit& c);
std::size_t self_inverse_count(const Circuit& c);
bool all_self_inverse(const Circuit& c);

/// Rewrites every gate into self-inverse kinds; the compiled circuit's total
/// unitary equals the input's up to global phase. Y rotations become two R
/// gates, X rotations two RYZ gates, and phase rotations (RZ, S, T, ...) an
/// H-conjugated RYZ pair. Already-Hermitian kinds pass through unchanged.
Circuit compile_self_inverse(const Circuit& c);

/// Swap-test circuit on 2d+1 qubits: H on the ancilla (qubit 0) then one
/// CSWAP(0, 1+i, 1+d+i) per register pair. The final ancilla Hadamard is left
/// to the measurement basis.
Circuit swap_test_circuit(std::size_t d);

}  // namespace vqc
