#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace narayana {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair (q_exp, t_exp) of a monomial q^a t^b.
struct Exponents {
  std::uint32_t q = 0;
  std::uint32_t t = 0;

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/**
 * Sparse polynomial in two commuting variables q and t with
 * arbitrary-precision integer coefficients.
 *
 * No stored coefficient is ever zero, so the zero polynomial is the empty
 * term map and two polynomials are equal iff their term maps are equal.
 * Iteration order is lexicographic in (q_exp, t_exp).
 */
class QTPolynomial {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  QTPolynomial() = default;
  explicit QTPolynomial(BigInt constant);

  static QTPolynomial monomial(std::uint32_t q_exp, std::uint32_t t_exp, BigInt coeff = 1);
  static QTPolynomial q() { return monomial(1, 0); }
  static QTPolynomial t() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::uint32_t q_exp, std::uint32_t t_exp) const;

  /// Adds coeff * q^q_exp t^t_exp in place, pruning on cancellation.
  void add_term(std::uint32_t q_exp, std::uint32_t t_exp, const BigInt& coeff);

  QTPolynomial& operator+=(const QTPolynomial& other);
  QTPolynomial& operator-=(const QTPolynomial& other);
  QTPolynomial& operator*=(const QTPolynomial& other);

  friend QTPolynomial operator+(QTPolynomial lhs, const QTPolynomial& rhs) { return lhs += rhs; }
  friend QTPolynomial operator-(QTPolynomial lhs, const QTPolynomial& rhs) { return lhs -= rhs; }
  friend QTPolynomial operator*(const QTPolynomial& lhs, const QTPolynomial& rhs);
  friend QTPolynomial operator-(const QTPolynomial& p);

  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  /// Multiplies by q^a t^b.
  QTPolynomial shifted(std::uint32_t a, std::uint32_t b) const;
  /// p(t, q).
  QTPolynomial swapped() const;
  /// p(1, 1).
  BigInt eval_ones() const;

  /// Human-readable form, e.g. "q^3*t^3 + 2*q^4*t^3"; "0" for zero.
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const QTPolynomial& p);

// Free-function spellings of the arithmetic above.
QTPolynomial poly_add(const QTPolynomial& a, const QTPolynomial& b);
QTPolynomial poly_mul(const QTPolynomial& a, const QTPolynomial& b);
QTPolynomial poly_monomial_shift(const QTPolynomial& p, std::uint32_t a, std::uint32_t b);
BigInt poly_eval_ones(const QTPolynomial& p);
QTPolynomial poly_swap_qt(const QTPolynomial& p);

/// [n]_q = 1 + q + ... + q^{n-1}, with [0]_q = 1.
QTPolynomial q_integer(std::uint32_t n);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
QTPolynomial q_factorial(std::uint32_t n);

/// Gaussian binomial [n choose k]_q. Throws std::invalid_argument if k > n.
QTPolynomial q_binomial(std::uint32_t n, std::uint32_t k);

/// Gaussian binomial extended by zero: 0 when k > n or either is negative.
/// Used inside the recursions, whose double sums touch such terms.
QTPolynomial q_binomial_or_zero(long n, long k);

/// Ordinary binomial coefficient.
BigInt binomial(std::uint32_t n, std::uint32_t k);

}  // namespace narayana
