// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqc/pauli.hpp"

namespace vqc {

/// Supported gate kinds. R(theta) = X sin(theta) + Z cos(theta) and
/// RYZ(theta) = Y sin(theta) - Z cos(theta) are the two Hermitian rotation
/// families; products of two gates from one family realize Y and X axis
/// rotations respectively.
enum class GateKind : std::uint8_t {
  H, S, Sdg, X, Y, Z, CNOT, CZ, SWAP,  // Clifford set
  RX, RY, RZ, R, RYZ, CSWAP, T, Tdg,   // non-Clifford
  I,
};

/// Total classification by kind, never by angle value; an RZ at a Clifford
/// angle still counts as non-Clifford.
bool is_clifford(GateKind k);
/// True exactly for kinds whose matrix is Hermitian.
bool is_self_inverse(GateKind k);
bool is_parameterized(GateKind k);
std::size_t gate_arity(GateKind k);
std::string gate_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
  GateKind kind = GateKind::I;
  std::array<std::size_t, 3> qubits{0, 0, 0};
  double angle = 0.0;

  Gate() = default;
  Gate(GateKind k, std::size_t q0);
  Gate(GateKind k, std::size_t q0, double theta);
  Gate(GateKind k, std::size_t q0, std::size_t q1);
  Gate(GateKind k, std::size_t q0, std::size_t q1, std::size_t q2);

  static Gate h(std::size_t q) { return {GateKind::H, q}; }
  static Gate s(std::size_t q) { return {GateKind::S, q}; }
  static Gate sdg(std::size_t q) { return {GateKind::Sdg, q}; }
  static Gate x(std::size_t q) { return {GateKind::X, q}; }
  static Gate y(std::size_t q) { return {GateKind::Y, q}; }
  static Gate z(std::size_t q) { return {GateKind::Z, q}; }
  static Gate t(std::size_t q) { return {GateKind::T, q}; }
  static Gate tdg(std::size_t q) { return {GateKind::Tdg, q}; }
  static Gate i(std::size_t q) { return {GateKind::I, q}; }
  static Gate rx(std::size_t q, double a) { return {GateKind::RX, q, a}; }
  static Gate ry(std::size_t q, double a) { return {GateKind::RY, q, a}; }
  static Gate rz(std::size_t q, double a) { return {GateKind::RZ, q, a}; }
  static Gate r(std::size_t q, double a) { return {GateKind::R, q, a}; }
  static Gate ryz(std::size_t q, double a) { return {GateKind::RYZ, q, a}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b}; }
  static Gate cswap(std::size_t c, std::size_t a, std::size_t b) {
    return {GateKind::CSWAP, c, a, b};
  }

  std::size_t arity() const { return gate_arity(kind); }
  /// The qubits the gate acts on, in listed order.
  std::vector<std::size_t> qubit_span() const;

  bool operator==(const Gate& other) const = default;
};

/// Dense matrix on the gate's support. Local index bit i corresponds to
/// qubits[i] (first listed qubit = least significant local bit).
Eigen::MatrixXcd dense_matrix(const Gate& g);

/// Image of a conjugated Pauli generator under a Clifford gate:
/// U P U^dag = (-1)^negated * word, where P is X or Z on local qubit
/// `local_qubit` and `word` is a Pauli word on the gate's support.
struct CliffordImage {
  PauliWord word;  // on gate_arity(kind) qubits
  bool negated = false;
};
CliffordImage clifford_image(GateKind kind, std::size_t local_qubit, bool z_generator);

}  // namespace vqc
