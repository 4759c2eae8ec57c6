// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqc/errors.hpp"

namespace vqc {

using Complex = std::complex<double>;

struct Gate;  // circuit.hpp

/// Single-qubit Pauli letter.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

/// A power of the imaginary unit, exponent kept mod 4.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : exp_(((exponent % 4) + 4) % 4) {}

  constexpr int exponent() const { return exp_; }
  Complex value() const {
    static constexpr double re[4] = {1, 0, -1, 0};
    static constexpr double im[4] = {0, 1, 0, -1};
    return {re[exp_], im[exp_]};
  }
  constexpr bool is_real() const { return exp_ == 0 || exp_ == 2; }
  constexpr double real_sign() const { return exp_ == 0 ? 1.0 : -1.0; }

  friend constexpr Phase operator*(Phase a, Phase b) { return Phase(a.exp_ + b.exp_); }
  friend constexpr bool operator==(Phase a, Phase b) { return a.exp_ == b.exp_; }

 private:
  int exp_ = 0;
};

/// An n-qubit Pauli word, bit-packed as an X mask and a Z mask
/// (bit q set in both = Y on qubit q). Phase lives outside the word.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::size_t n) : n_(n) {}
  PauliWord(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliWord identity(std::size_t n) { return PauliWord(n); }
  static PauliWord single(std::size_t n, std::size_t qubit, Letter l);
  /// Parses a letter string, character position q = qubit q ("XIZ" = X0 Z2).
  static PauliWord from_string(const std::string& letters);

  std::size_t n() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  Letter letter(std::size_t qubit) const;
  void set_letter(std::size_t qubit, Letter l);

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  /// Number of non-identity letters.
  int weight() const;
  /// Number of Y letters (needed for the i^y canonical phase convention).
  int y_count() const;

  std::string str() const;

  /// Action on a computational basis state: word|j> = phase * |j XOR x_mask>,
  /// phase = i^{y_count} * (-1)^{popcount(z_mask & j)}.
  Phase basis_phase(std::uint64_t j) const;

  friend bool operator==(const PauliWord& a, const PauliWord& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  /// Canonical order: lexicographic on (z_mask, x_mask), Z-mask major.
  friend bool operator<(const PauliWord& a, const PauliWord& b) {
    if (a.z_ != b.z_) return a.z_ < b.z_;
    return a.x_ < b.x_;
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Product of two words: returns the canonical word and the phase in {1,i,-1,-i}.
std::pair<PauliWord, Phase> mul_words(const PauliWord& a, const PauliWord& b);

/// One word with a complex scalar; intermediate products carry phases,
/// canonicalized sums keep coefficients real.
struct PauliTerm {
  PauliWord word;
  Complex coefficient{1.0, 0.0};
};

/// Coefficients with magnitude below this are pruned from sums.
inline constexpr double kPruneTol = 1e-12;
/// Residual imaginary part above this on a canonicalized sum signals a bug.
inline constexpr double kHermTol = 1e-8;
/// Default qubit cap for densification.
inline constexpr std::size_t kDenseQubitCap = 12;

/// Real-weighted sum of Pauli words over a fixed qubit count. Hermitian by
/// construction; term map is canonically ordered for deterministic iteration.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t n) : n_(n) {}

  static PauliSum zero(std::size_t n) { return PauliSum(n); }
  static PauliSum identity(std::size_t n, double coefficient = 1.0);
  static PauliSum from_terms(std::size_t n, const std::vector<std::pair<PauliWord, double>>& terms);

  std::size_t n() const { return n_; }
  std::size_t cardinality() const { return terms_.size(); }
  const std::map<PauliWord, double>& terms() const { return terms_; }

  double coefficient(const PauliWord& w) const;
  /// Accumulates c into the coefficient of w; prunes if the result is tiny.
  void add_term(const PauliWord& w, double c, double tol = kPruneTol);
  void prune(double tol = kPruneTol);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }

  /// max |coefficient| over stored terms (0 for the empty sum).
  double max_abs_coefficient() const;

  bool operator==(const PauliSum& other) const = default;

 private:
  std::size_t n_ = 0;
  std::map<PauliWord, double> terms_;
};

/// Accumulator for products with complex intermediate phases. finalize()
/// asserts the imaginary parts cancel and returns the real-coefficient sum.
class ComplexAccumulator {
 public:
  explicit ComplexAccumulator(std::size_t n) : n_(n) {}
  void add(const PauliWord& w, Complex c);
  void add_product(const PauliTerm& a, const PauliTerm& b);
  /// Throws if any residual imaginary part exceeds kHermTol.
  PauliSum finalize(double tol = kPruneTol) const;

 private:
  std::size_t n_;
  std::map<PauliWord, Complex> terms_;
};

PauliSum add(const PauliSum& a, const PauliSum& b);

/// Exact symbolic H^2.
PauliSum square(const PauliSum& h);

/// Exact symbolic product A*B when the result is known Hermitian.
PauliSum multiply(const PauliSum& a, const PauliSum& b);

std::size_t cardinality(const PauliSum& h);

/// Tensor product; a's qubits become 0..a.n-1, b's become a.n..a.n+b.n-1.
PauliSum tensor(const PauliSum& a, const PauliSum& b);

/// Conjugation U w U^dag of one word by a Clifford gate: exactly one word out,
/// sign in {+1,-1}. Throws ClassificationError for non-Clifford kinds.
std::pair<PauliWord, double> conjugate_word_clifford(const PauliWord& w, const Gate& g);

/// U h U^dag for a Clifford gate; cardinality is preserved exactly.
PauliSum conjugate_clifford(const PauliSum& h, const Gate& g);

/// U h U^dag for any supported gate. Clifford kinds dispatch to the symbolic
/// path; other kinds conjugate through the gate's dense matrix on its support
/// (growth factor at most 16 per single-qubit gate, 4^(2k) for k-qubit gates).
PauliSum conjugate_unitary(const PauliSum& h, const Gate& g);

/// Dense Hermitian matrix of h, dimension 2^n with qubit 0 as the least
/// significant index bit. Throws CapExceededError above the cap.
Eigen::MatrixXcd to_dense(const PauliSum& h, std::size_t qubit_cap = kDenseQubitCap);

/// Text format: one `<coefficient> <letters>` line per term, canonical order,
/// '#' comments. Round-trips bit-exactly through parse_pauli_sum.
std::string serialize_pauli_sum(const PauliSum& h);
PauliSum parse_pauli_sum(const std::string& text);
PauliSum load_pauli_sum(const std::string& path);
void save_pauli_sum(const PauliSum& h, const std::string& path);

}  // namespace vqc
