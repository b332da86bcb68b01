#include "narayana/qtpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace narayana {

QTPolynomial::QTPolynomial(BigInt constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, std::move(constant));
}

QTPolynomial QTPolynomial::monomial(std::uint32_t q_exp, std::uint32_t t_exp, BigInt coeff) {
  QTPolynomial p;
  if (coeff != 0) p.terms_.emplace(Exponents{q_exp, t_exp}, std::move(coeff));
  return p;
}

BigInt QTPolynomial::coefficient(std::uint32_t q_exp, std::uint32_t t_exp) const {
  auto it = terms_.find(Exponents{q_exp, t_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QTPolynomial::add_term(std::uint32_t q_exp, std::uint32_t t_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponents{q_exp, t_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, c);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, -c);
  return *this;
}

QTPolynomial operator*(const QTPolynomial& lhs, const QTPolynomial& rhs) {
  QTPolynomial out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea.q + eb.q, ea.t + eb.t, ca * cb);
  }
  return out;
}

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& other) {
  *this = *this * other;
  return *this;
}

QTPolynomial operator-(const QTPolynomial& p) {
  QTPolynomial out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
  return out;
}

QTPolynomial QTPolynomial::shifted(std::uint32_t a, std::uint32_t b) const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponents{e.q + a, e.t + b}, c);
  return out;
}

QTPolynomial QTPolynomial::swapped() const {
  QTPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.t, e.q}, c);
  return out;
}

BigInt QTPolynomial::eval_ones() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string QTPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.q != 0 || e.t != 0;
    bool wrote = false;
    if (mag != 1 || !has_var) {
      os << mag;
      wrote = true;
    }
    auto var = [&](char name, std::uint32_t exp) {
      if (exp == 0) return;
      if (wrote) os << '*';
      os << name;
      if (exp != 1) os << '^' << exp;
      wrote = true;
    };
    var('q', e.q);
    var('t', e.t);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QTPolynomial& p) { return os << p.to_string(); }

QTPolynomial poly_add(const QTPolynomial& a, const QTPolynomial& b) { return a + b; }
QTPolynomial poly_mul(const QTPolynomial& a, const QTPolynomial& b) { return a * b; }
QTPolynomial poly_monomial_shift(const QTPolynomial& p, std::uint32_t a, std::uint32_t b) {
  return p.shifted(a, b);
}
BigInt poly_eval_ones(const QTPolynomial& p) { return p.eval_ones(); }
QTPolynomial poly_swap_qt(const QTPolynomial& p) { return p.swapped(); }

QTPolynomial q_integer(std::uint32_t n) {
  if (n == 0) return QTPolynomial(1);
  QTPolynomial out;
  for (std::uint32_t i = 0; i < n; ++i) out.add_term(i, 0, 1);
  return out;
}

QTPolynomial q_factorial(std::uint32_t n) {
  QTPolynomial out(1);
  for (std::uint32_t i = 1; i <= n; ++i) out *= q_integer(i);
  return out;
}

QTPolynomial q_binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("q_binomial: k > n");
  // Pascal row by row: [i, j] = [i-1, j-1] + q^j [i-1, j].
  std::vector<QTPolynomial> row(k + 1);
  row[0] = QTPolynomial(1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(j, 0);
    }
  }
  return row[k];
}

QTPolynomial q_binomial_or_zero(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  return q_binomial(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace narayana
