// SPDX-License-Identifier: Apache-2.0

#include "vqc/gates.hpp"

#include <cmath>
#include <map>

namespace vqc {

bool is_clifford(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::I:
      return true;
    default:
      return false;
  }
}

bool is_self_inverse(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::CSWAP:
    case GateKind::R:
    case GateKind::RYZ:
    case GateKind::I:
      return true;
    default:
      return false;
  }
}

bool is_parameterized(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::R:
    case GateKind::RYZ:
      return true;
    default:
      return false;
  }
}

std::size_t gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      return 2;
    case GateKind::CSWAP:
      return 3;
    default:
      return 1;
  }
}

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::R: return "R";
    case GateKind::RYZ: return "RYZ";
    case GateKind::CSWAP: return "CSWAP";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::I: return "I";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"H", GateKind::H},       {"S", GateKind::S},     {"SDG", GateKind::Sdg},
      {"X", GateKind::X},       {"Y", GateKind::Y},     {"Z", GateKind::Z},
      {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ},   {"SWAP", GateKind::SWAP},
      {"RX", GateKind::RX},     {"RY", GateKind::RY},   {"RZ", GateKind::RZ},
      {"R", GateKind::R},       {"RYZ", GateKind::RYZ}, {"CSWAP", GateKind::CSWAP},
      {"T", GateKind::T},       {"TDG", GateKind::Tdg}, {"I", GateKind::I}};
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown gate name '" + name + "'");
  return it->second;
}

namespace {

void check_arity(GateKind k, std::size_t got) {
  if (gate_arity(k) != got) {
    throw DimensionError("gate " + gate_name(k) + " takes " + std::to_string(gate_arity(k)) +
                         " qubit(s), got " + std::to_string(got));
  }
}

void check_angle(GateKind k, bool have_angle) {
  if (is_parameterized(k) != have_angle) {
    throw ParseError("gate " + gate_name(k) +
                     (have_angle ? " takes no angle" : " requires an angle"));
  }
}

void check_distinct(const std::array<std::size_t, 3>& qs, std::size_t arity) {
  for (std::size_t i = 0; i < arity; ++i) {
    for (std::size_t j = i + 1; j < arity; ++j) {
      if (qs[i] == qs[j]) throw DimensionError("duplicate qubit in one gate");
    }
  }
}

}  // namespace

Gate::Gate(GateKind k, std::size_t q0) : kind(k), qubits{q0, 0, 0} {
  check_arity(k, 1);
  check_angle(k, false);
}

Gate::Gate(GateKind k, std::size_t q0, double theta) : kind(k), qubits{q0, 0, 0}, angle(theta) {
  check_arity(k, 1);
  check_angle(k, true);
}

Gate::Gate(GateKind k, std::size_t q0, std::size_t q1) : kind(k), qubits{q0, q1, 0} {
  check_arity(k, 2);
  check_distinct(qubits, 2);
}

Gate::Gate(GateKind k, std::size_t q0, std::size_t q1, std::size_t q2)
    : kind(k), qubits{q0, q1, q2} {
  check_arity(k, 3);
  check_distinct(qubits, 3);
}

std::vector<std::size_t> Gate::qubit_span() const {
  return {qubits.begin(), qubits.begin() + arity()};
}

Eigen::MatrixXcd dense_matrix(const Gate& g) {
  using std::cos;
  using std::sin;
  const Complex im(0.0, 1.0);
  const double th = g.angle;
  Eigen::MatrixXcd m;
  switch (g.kind) {
    case GateKind::H:
      m.resize(2, 2);
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      return m;
    case GateKind::S: return Eigen::Vector2cd(1.0, im).asDiagonal();
    case GateKind::Sdg: return Eigen::Vector2cd(1.0, -im).asDiagonal();
    case GateKind::X:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m.resize(2, 2);
      m << 0, -im, im, 0;
      return m;
    case GateKind::Z: return Eigen::Vector2cd(1.0, -1.0).asDiagonal();
    case GateKind::T: return Eigen::Vector2cd(1.0, std::exp(im * (M_PI / 4))).asDiagonal();
    case GateKind::Tdg: return Eigen::Vector2cd(1.0, std::exp(-im * (M_PI / 4))).asDiagonal();
    case GateKind::I: return Eigen::MatrixXcd::Identity(2, 2);
    case GateKind::RX:
      m.resize(2, 2);
      m << cos(th / 2), -im * sin(th / 2), -im * sin(th / 2), cos(th / 2);
      return m;
    case GateKind::RY:
      m.resize(2, 2);
      m << cos(th / 2), -sin(th / 2), sin(th / 2), cos(th / 2);
      return m;
    case GateKind::RZ:
      return Eigen::Vector2cd(std::exp(-im * (th / 2)), std::exp(im * (th / 2))).asDiagonal();
    case GateKind::R:
      m.resize(2, 2);
      m << cos(th), sin(th), sin(th), -cos(th);
      return m;
    case GateKind::RYZ:
      m.resize(2, 2);
      m << -cos(th), -im * sin(th), im * sin(th), cos(th);
      return m;
    case GateKind::CNOT: {
      // Local bit 0 = control, bit 1 = target.
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(3, 1) = 1;
      m(2, 2) = 1;
      m(1, 3) = 1;
      return m;
    }
    case GateKind::CZ: return Eigen::Vector4cd(1, 1, 1, -1).asDiagonal();
    case GateKind::SWAP: {
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 1) = 1;
      m(1, 2) = 1;
      m(3, 3) = 1;
      return m;
    }
    case GateKind::CSWAP: {
      // Local bit 0 = control; bits 1 and 2 swapped when control set.
      m = Eigen::MatrixXcd::Zero(8, 8);
      for (int j = 0; j < 8; ++j) {
        int out = j;
        if (j & 1) {
          const int b1 = (j >> 1) & 1, b2 = (j >> 2) & 1;
          out = 1 | (b2 << 1) | (b1 << 2);
        }
        m(out, j) = 1;
      }
      return m;
    }
  }
  throw std::logic_error("unhandled gate kind");
}

CliffordImage clifford_image(GateKind kind, std::size_t local_qubit, bool z_generator) {
  const std::size_t k = gate_arity(kind);
  auto word = [&](const char* letters) { return PauliWord::from_string(letters); };
  switch (kind) {
    case GateKind::I:
      return {PauliWord::single(1, 0, z_generator ? Letter::Z : Letter::X), false};
    case GateKind::H:
      return {word(z_generator ? "X" : "Z"), false};
    case GateKind::S:
      return z_generator ? CliffordImage{word("Z"), false} : CliffordImage{word("Y"), false};
    case GateKind::Sdg:
      return z_generator ? CliffordImage{word("Z"), false} : CliffordImage{word("Y"), true};
    case GateKind::X:
      return z_generator ? CliffordImage{word("Z"), true} : CliffordImage{word("X"), false};
    case GateKind::Y:
      return z_generator ? CliffordImage{word("Z"), true} : CliffordImage{word("X"), true};
    case GateKind::Z:
      return z_generator ? CliffordImage{word("Z"), false} : CliffordImage{word("X"), true};
    case GateKind::CNOT:
      // control = local 0, target = local 1
      if (local_qubit == 0) {
        return z_generator ? CliffordImage{word("ZI"), false} : CliffordImage{word("XX"), false};
      }
      return z_generator ? CliffordImage{word("ZZ"), false} : CliffordImage{word("IX"), false};
    case GateKind::CZ:
      if (local_qubit == 0) {
        return z_generator ? CliffordImage{word("ZI"), false} : CliffordImage{word("XZ"), false};
      }
      return z_generator ? CliffordImage{word("IZ"), false} : CliffordImage{word("ZX"), false};
    case GateKind::SWAP: {
      PauliWord w(k);
      w.set_letter(1 - local_qubit, z_generator ? Letter::Z : Letter::X);
      return {w, false};
    }
    default:
      throw ClassificationError("gate " + gate_name(kind) + " is not in the Clifford set");
  }
}

}  // namespace vqc
