// SPDX-License-Identifier: Apache-2.0

#include "vqc/pauli.hpp"

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vqc/gates.hpp"

namespace vqc {

char letter_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'I': return Letter::I;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'Z': return Letter::Z;
    default: throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

namespace {

// Letter <-> (x bit, z bit): I=00, X=10, Y=11, Z=01.
constexpr std::uint8_t letter_x(Letter l) { return (l == Letter::X || l == Letter::Y) ? 1 : 0; }
constexpr std::uint8_t letter_z(Letter l) { return (l == Letter::Z || l == Letter::Y) ? 1 : 0; }

Letter letter_from_bits(std::uint8_t x, std::uint8_t z) {
  if (x && z) return Letter::Y;
  if (x) return Letter::X;
  if (z) return Letter::Z;
  return Letter::I;
}

void check_qubit(std::size_t q, std::size_t n) {
  if (q >= n) {
    throw DimensionError("qubit index " + std::to_string(q) + " out of range for n=" +
                         std::to_string(n));
  }
}

void check_same_n(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": qubit counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

PauliWord::PauliWord(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n), x_(x_mask), z_(z_mask) {
  if (n > 64) throw DimensionError("PauliWord supports at most 64 qubits");
  if (n < 64) {
    const std::uint64_t valid = (std::uint64_t{1} << n) - 1;
    if ((x_ & ~valid) || (z_ & ~valid)) throw DimensionError("mask bits beyond qubit count");
  }
}

PauliWord PauliWord::single(std::size_t n, std::size_t qubit, Letter l) {
  check_qubit(qubit, n);
  PauliWord w(n);
  w.set_letter(qubit, l);
  return w;
}

PauliWord PauliWord::from_string(const std::string& letters) {
  PauliWord w(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) w.set_letter(q, letter_from_char(letters[q]));
  return w;
}

Letter PauliWord::letter(std::size_t qubit) const {
  check_qubit(qubit, n_);
  return letter_from_bits((x_ >> qubit) & 1, (z_ >> qubit) & 1);
}

void PauliWord::set_letter(std::size_t qubit, Letter l) {
  check_qubit(qubit, n_);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  x_ = (x_ & ~bit) | (letter_x(l) ? bit : 0);
  z_ = (z_ & ~bit) | (letter_z(l) ? bit : 0);
}

int PauliWord::weight() const { return std::popcount(x_ | z_); }

int PauliWord::y_count() const { return std::popcount(x_ & z_); }

std::string PauliWord::str() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = letter_char(letter(q));
  return s;
}

Phase PauliWord::basis_phase(std::uint64_t j) const {
  return Phase(y_count() + 2 * std::popcount(z_ & j));
}

std::pair<PauliWord, Phase> mul_words(const PauliWord& a, const PauliWord& b) {
  check_same_n(a.n(), b.n(), "mul_words");
  PauliWord c(a.n(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask());
  // Canonical word = i^{#Y} X^x Z^z; commuting Z^za past X^xb costs (-1)^{|za & xb|}.
  const int p = a.y_count() + b.y_count() - c.y_count() +
                2 * std::popcount(a.z_mask() & b.x_mask());
  return {c, Phase(p)};
}

PauliSum PauliSum::identity(std::size_t n, double coefficient) {
  PauliSum h(n);
  h.add_term(PauliWord::identity(n), coefficient);
  return h;
}

PauliSum PauliSum::from_terms(std::size_t n,
                              const std::vector<std::pair<PauliWord, double>>& terms) {
  PauliSum h(n);
  for (const auto& [w, c] : terms) h.add_term(w, c);
  return h;
}

double PauliSum::coefficient(const PauliWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0.0 : it->second;
}

void PauliSum::add_term(const PauliWord& w, double c, double tol) {
  check_same_n(w.n(), n_, "add_term");
  auto [it, inserted] = terms_.try_emplace(w, 0.0);
  it->second += c;
  if (std::abs(it->second) < tol) terms_.erase(it);
}

void PauliSum::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_n(n_, other.n_, "add");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_n(n_, other.n_, "subtract");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  prune();
  return *this;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void ComplexAccumulator::add(const PauliWord& w, Complex c) {
  check_same_n(w.n(), n_, "accumulate");
  terms_[w] += c;
}

void ComplexAccumulator::add_product(const PauliTerm& a, const PauliTerm& b) {
  auto [w, phase] = mul_words(a.word, b.word);
  terms_[w] += a.coefficient * b.coefficient * phase.value();
}

PauliSum ComplexAccumulator::finalize(double tol) const {
  PauliSum h(n_);
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.imag()) > kHermTol) {
      throw std::logic_error("non-Hermitian accumulation: imag " + std::to_string(c.imag()) +
                             " on word " + w.str());
    }
    h.add_term(w, c.real(), tol);
  }
  return h;
}

PauliSum add(const PauliSum& a, const PauliSum& b) { return a + b; }

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  check_same_n(a.n(), b.n(), "multiply");
  ComplexAccumulator acc(a.n());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      acc.add_product({wa, ca}, {wb, cb});
    }
  }
  return acc.finalize();
}

PauliSum square(const PauliSum& h) { return multiply(h, h); }

std::size_t cardinality(const PauliSum& h) { return h.cardinality(); }

PauliSum tensor(const PauliSum& a, const PauliSum& b) {
  const std::size_t n = a.n() + b.n();
  PauliSum out(n);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      PauliWord w(n, wa.x_mask() | (wb.x_mask() << a.n()), wa.z_mask() | (wb.z_mask() << a.n()));
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::pair<PauliWord, double> conjugate_word_clifford(const PauliWord& w, const Gate& g) {
  if (!is_clifford(g.kind)) {
    throw ClassificationError("gate " + gate_name(g.kind) + " is not in the Clifford set");
  }
  const auto qs = g.qubit_span();
  for (std::size_t q : qs) check_qubit(q, w.n());
  if (g.kind == GateKind::I) return {w, 1.0};

  const std::size_t k = qs.size();
  // Local sub-word on the gate support; local qubit index = position in qs.
  PauliWord local(k);
  int y_in = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Letter l = w.letter(qs[i]);
    local.set_letter(i, l);
    if (l == Letter::Y) ++y_in;
  }
  // W_local = i^{y_in} prod_q X_q^{x_q} Z_q^{z_q}; conjugation maps each
  // generator to its image, the ordered product recombines symbolically.
  PauliWord acc = PauliWord::identity(k);
  Phase phase(y_in);
  for (std::size_t i = 0; i < k; ++i) {
    if ((local.x_mask() >> i) & 1) {
      const CliffordImage img = clifford_image(g.kind, i, /*z_generator=*/false);
      auto [word, p] = mul_words(acc, img.word);
      acc = word;
      phase = phase * p * Phase(img.negated ? 2 : 0);
    }
    if ((local.z_mask() >> i) & 1) {
      const CliffordImage img = clifford_image(g.kind, i, /*z_generator=*/true);
      auto [word, p] = mul_words(acc, img.word);
      acc = word;
      phase = phase * p * Phase(img.negated ? 2 : 0);
    }
  }
  if (!phase.is_real()) {
    throw std::logic_error("Clifford conjugation produced a non-real phase");
  }
  PauliWord out = w;
  for (std::size_t i = 0; i < k; ++i) out.set_letter(qs[i], acc.letter(i));
  return {out, phase.real_sign()};
}

PauliSum conjugate_clifford(const PauliSum& h, const Gate& g) {
  PauliSum out(h.n());
  for (const auto& [w, c] : h.terms()) {
    auto [w2, sign] = conjugate_word_clifford(w, g);
    // Clifford conjugation is a bijection on words: no merges, exact cardinality.
    out.add_term(w2, sign * c, 0.0);
  }
  return out;
}

namespace {

// Dense conjugation of a local word by the gate matrix, re-expanded in the
// local Pauli basis: coeff_P = tr(P M w M^dag) / 2^k, real for Hermitian input.
std::vector<std::pair<std::uint32_t, double>> conjugate_local_word(
    const Eigen::MatrixXcd& m, std::size_t k, std::uint32_t local_index) {
  const std::size_t dim = std::size_t{1} << k;
  // local_index packs (x_mask | z_mask << k).
  PauliWord w(k, local_index & (dim - 1), local_index >> k);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    dense(j ^ w.x_mask(), j) = w.basis_phase(j).value();
  }
  const Eigen::MatrixXcd conj = m * dense * m.adjoint();
  std::vector<std::pair<std::uint32_t, double>> out;
  for (std::uint32_t p = 0; p < dim * dim; ++p) {
    PauliWord pw(k, p & (dim - 1), p >> k);
    Complex tr = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
      // tr(P * conj) picks row j XOR x of column j.
      tr += pw.basis_phase(j).value() * conj(j, j ^ pw.x_mask());
    }
    const Complex coeff = tr / static_cast<double>(dim);
    if (std::abs(coeff.imag()) > kHermTol) {
      throw std::logic_error("dense conjugation produced non-Hermitian coefficient");
    }
    if (std::abs(coeff.real()) > kPruneTol) out.emplace_back(p, coeff.real());
  }
  return out;
}

}  // namespace

PauliSum conjugate_unitary(const PauliSum& h, const Gate& g) {
  if (is_clifford(g.kind)) return conjugate_clifford(h, g);
  const auto qs = g.qubit_span();
  for (std::size_t q : qs) check_qubit(q, h.n());
  const std::size_t k = qs.size();
  const Eigen::MatrixXcd m = dense_matrix(g);

  // Memoized local conjugation table, keyed by the packed local word.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, double>>> table;
  PauliSum out(h.n());
  for (const auto& [w, c] : h.terms()) {
    std::uint32_t local = 0;
    for (std::size_t i = 0; i < k; ++i) {
      local |= static_cast<std::uint32_t>((w.x_mask() >> qs[i]) & 1) << i;
      local |= static_cast<std::uint32_t>((w.z_mask() >> qs[i]) & 1) << (i + k);
    }
    auto it = table.find(local);
    if (it == table.end()) it = table.emplace(local, conjugate_local_word(m, k, local)).first;
    for (const auto& [p, coeff] : it->second) {
      // Splice the local image into the full word.
      std::uint64_t x2 = w.x_mask(), z2 = w.z_mask();
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << qs[i];
        x2 = (x2 & ~bit) | (((p >> i) & 1) ? bit : 0);
        z2 = (z2 & ~bit) | (((p >> (i + k)) & 1) ? bit : 0);
      }
      out.add_term(PauliWord(h.n(), x2, z2), c * coeff);
    }
  }
  return out;
}

Eigen::MatrixXcd to_dense(const PauliSum& h, std::size_t qubit_cap) {
  if (h.n() > qubit_cap) {
    throw CapExceededError("to_dense: " + std::to_string(h.n()) + " qubits exceeds cap " +
                           std::to_string(qubit_cap));
  }
  const std::size_t dim = std::size_t{1} << h.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [w, c] : h.terms()) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      m(j ^ w.x_mask(), j) += c * w.basis_phase(j).value();
    }
  }
  return m;
}

std::string serialize_pauli_sum(const PauliSum& h) {
  std::ostringstream out;
  out << "# n=" << h.n() << " terms=" << h.cardinality() << "\n";
  char buf[64];
  for (const auto& [w, c] : h.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g", c);
    out << buf << ' ' << w.str() << '\n';
  }
  return out.str();
}

PauliSum parse_pauli_sum(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  PauliSum h;
  bool have_n = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string coeff_tok, letters, extra;
    if (!(ls >> coeff_tok)) continue;  // blank
    if (!(ls >> letters) || (ls >> extra)) {
      throw ParseError("pauli line " + std::to_string(lineno) +
                       ": expected `<coefficient> <letters>`");
    }
    char* end = nullptr;
    const double c = std::strtod(coeff_tok.c_str(), &end);
    if (end == coeff_tok.c_str() || *end != '\0' || !std::isfinite(c)) {
      throw ParseError("pauli line " + std::to_string(lineno) + ": bad coefficient '" +
                       coeff_tok + "'");
    }
    PauliWord w = PauliWord::from_string(letters);
    if (!have_n) {
      h = PauliSum(w.n());
      have_n = true;
    } else if (w.n() != h.n()) {
      throw ParseError("pauli line " + std::to_string(lineno) + ": letter string length " +
                       std::to_string(w.n()) + " != " + std::to_string(h.n()));
    }
    h.add_term(w, c);
  }
  if (!have_n) throw ParseError("pauli file contains no terms");
  return h;
}

PauliSum load_pauli_sum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pauli file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pauli_sum(ss.str());
}

void save_pauli_sum(const PauliSum& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write pauli file: " + path);
  out << serialize_pauli_sum(h);
}

}  // namespace vqc
