// SPDX-License-Identifier: Apache-2.0

#include "vqc/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vqc {

Circuit& Circuit::add(const Gate& g) {
  for (std::size_t q : g.qubit_span()) {
    if (q >= n) {
      throw DimensionError("gate " + gate_name(g.kind) + " touches qubit " + std::to_string(q) +
                           " outside width " + std::to_string(n));
    }
  }
  gates.push_back(g);
  return *this;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t declared_n = 0;
  struct Raw {
    GateKind kind;
    std::vector<std::size_t> qubits;
    double angle;
  };
  std::vector<Raw> raws;
  std::size_t max_q = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      // Optional width header: `# n=<width>`.
      std::istringstream hs(line.substr(hash + 1));
      std::string tok;
      if (hs >> tok && tok.rfind("n=", 0) == 0) declared_n = std::stoul(tok.substr(2));
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    const GateKind kind = gate_kind_from_name(name);
    Raw raw{kind, {}, 0.0};
    const std::size_t arity = gate_arity(kind);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    const std::size_t want = arity + (is_parameterized(kind) ? 1 : 0);
    if (toks.size() != want) {
      throw ParseError("circuit line " + std::to_string(lineno) + ": " + name + " expects " +
                       std::to_string(arity) + " qubit(s)" +
                       (is_parameterized(kind) ? " and an angle" : "") + ", got " +
                       std::to_string(toks.size()) + " argument(s)");
    }
    for (std::size_t i = 0; i < arity; ++i) {
      char* end = nullptr;
      const long q = std::strtol(toks[i].c_str(), &end, 10);
      if (end == toks[i].c_str() || *end != '\0' || q < 0) {
        throw ParseError("circuit line " + std::to_string(lineno) + ": bad qubit index '" +
                         toks[i] + "'");
      }
      raw.qubits.push_back(static_cast<std::size_t>(q));
      max_q = std::max(max_q, static_cast<std::size_t>(q));
    }
    if (is_parameterized(kind)) {
      char* end = nullptr;
      raw.angle = std::strtod(toks[arity].c_str(), &end);
      if (end == toks[arity].c_str() || *end != '\0' || !std::isfinite(raw.angle)) {
        throw ParseError("circuit line " + std::to_string(lineno) + ": bad angle '" +
                         toks[arity] + "'");
      }
    }
    raws.push_back(std::move(raw));
    any = true;
  }
  const std::size_t width = declared_n ? declared_n : (any ? max_q + 1 : 0);
  Circuit c(width);
  for (const auto& raw : raws) {
    switch (raw.qubits.size()) {
      case 1:
        c.add(is_parameterized(raw.kind) ? Gate(raw.kind, raw.qubits[0], raw.angle)
                                         : Gate(raw.kind, raw.qubits[0]));
        break;
      case 2: c.add(Gate(raw.kind, raw.qubits[0], raw.qubits[1])); break;
      case 3: c.add(Gate(raw.kind, raw.qubits[0], raw.qubits[1], raw.qubits[2])); break;
      default: throw ParseError("unsupported gate arity");
    }
  }
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "# n=" << c.n << "\n";
  char buf[64];
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind);
    for (std::size_t q : g.qubit_span()) out << ' ' << q;
    if (is_parameterized(g.kind)) {
      std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
      out << ' ' << buf;
    }
    out << '\n';
  }
  return out.str();
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

void save_circuit(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write circuit file: " + path);
  out << serialize_circuit(c);
}

std::size_t non_clifford_count(const Circuit& c) {
  std::size_t count = 0;
  for (const Gate& g : c.gates) {
    if (!is_clifford(g.kind)) ++count;
  }
  return count;
}

std::size_t self_inverse_count(const Circuit& c) {
  std::size_t count = 0;
  for (const Gate& g : c.gates) {
    if (is_self_inverse(g.kind)) ++count;
  }
  return count;
}

bool all_self_inverse(const Circuit& c) { return self_inverse_count(c) == c.size(); }

namespace {

// e^{-i(a-b)Y} = R(a)R(b) and e^{-i(a-b)X} = RYZ(a)RYZ(b); with b = pi/2-t/2
// and a = pi/2 the pair realizes the standard rotation gates exactly.
void emit_ry(std::vector<Gate>& out, std::size_t q, double theta) {
  out.push_back(Gate::r(q, M_PI / 2 - theta / 2));
  out.push_back(Gate::r(q, M_PI / 2));
}

void emit_rx(std::vector<Gate>& out, std::size_t q, double theta) {
  out.push_back(Gate::ryz(q, M_PI / 2 - theta / 2));
  out.push_back(Gate::ryz(q, M_PI / 2));
}

// RZ(t) = H RX(t) H, up to global phase for the S/T family.
void emit_rz(std::vector<Gate>& out, std::size_t q, double theta) {
  out.push_back(Gate::h(q));
  emit_rx(out, q, theta);
  out.push_back(Gate::h(q));
}

}  // namespace

Circuit compile_self_inverse(const Circuit& c) {
  Circuit out(c.n, c.name.empty() ? "" : c.name + "+hermitian");
  for (const Gate& g : c.gates) {
    if (is_self_inverse(g.kind)) {
      out.add(g);
      continue;
    }
    const std::size_t q = g.qubits[0];
    std::vector<Gate> gates;
    switch (g.kind) {
      case GateKind::RY: emit_ry(gates, q, g.angle); break;
      case GateKind::RX: emit_rx(gates, q, g.angle); break;
      case GateKind::RZ: emit_rz(gates, q, g.angle); break;
      case GateKind::S: emit_rz(gates, q, M_PI / 2); break;
      case GateKind::Sdg: emit_rz(gates, q, -M_PI / 2); break;
      case GateKind::T: emit_rz(gates, q, M_PI / 4); break;
      case GateKind::Tdg: emit_rz(gates, q, -M_PI / 4); break;
      default:
        throw ClassificationError("no self-inverse compilation for gate " + gate_name(g.kind));
    }
    for (const Gate& e : gates) out.add(e);
  }
  return out;
}

Circuit swap_test_circuit(std::size_t d) {
  if (d < 1) throw DimensionError("swap test needs at least one qubit per register");
  Circuit c(2 * d + 1, "swap_test_d" + std::to_string(d));
  c.add(Gate::h(0));
  for (std::size_t i = 0; i < d; ++i) c.add(Gate::cswap(0, 1 + i, 1 + d + i));
  return c;
}

}  // namespace vqc
