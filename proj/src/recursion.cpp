#include "narayana/recursion.hpp"

#include "narayana/errors.hpp"
#include "narayana/parking.hpp"

#include <string>

namespace narayana {

const char* family_name(Family f) {
  switch (f) {
    case Family::TildeNara:
      return "tilde-nara";
    case Family::Nara:
      return "nara";
    case Family::Para:
      return "para";
  }
  return "?";
}

bool in_range(const RecursionKey& key) {
  switch (key.family) {
    case Family::TildeNara:
      return key.first >= 1 && key.second >= 1 && key.r >= 1 && key.r <= key.second && key.s + 1 <= key.first;
    case Family::Nara:
      return key.first >= 1 && key.second >= 1 && key.r >= 1 && key.r <= key.first && key.s + 1 <= key.second;
    case Family::Para:
      return key.r <= key.first && key.s <= key.second;
  }
  return false;
}

QTPolynomial RecursionEngine::evaluate(const RecursionKey& key) {
  if (!in_range(key)) {
    throw ValidationError(std::string(family_name(key.family)) + " refinement (r,s)=(" + std::to_string(key.r) +
                          "," + std::to_string(key.s) + ") is out of range for box (" + std::to_string(key.first) +
                          "," + std::to_string(key.second) + ")");
  }
  if (memoize_) {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  QTPolynomial value = compute(key);
  if (memoize_) {
    std::lock_guard lock(mutex_);
    cache_.emplace(key, value);
  }
  return value;
}

std::size_t RecursionEngine::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

QTPolynomial RecursionEngine::compute(const RecursionKey& key) {
  return key.family == Family::Para ? compute_para(key) : compute_nara_like(key);
}

QTPolynomial RecursionEngine::compute_nara_like(const RecursionKey& key) {
  // rows bounds r (the run of 1's), cols bounds s + 1 (the 0b and the 1b's).
  const bool tilde = key.family == Family::TildeNara;
  const long rows = tilde ? key.second : key.first;
  const long cols = tilde ? key.first : key.second;
  const long r = key.r;
  const long s = key.s;
  const auto size = static_cast<std::uint32_t>(rows + cols - 1);

  if (r == rows) {
    if (s != cols - 1) return {};
    return q_binomial_or_zero(rows + cols - 2, cols - 1).shifted(size, size);
  }
  if (cols == 1) return {};

  QTPolynomial sum;
  const QTPolynomial outer = q_binomial_or_zero(s + r - 1, s);
  for (long h = 1; h <= rows - r; ++h) {
    const QTPolynomial inner = outer * q_binomial_or_zero(s + h - 1, h);
    if (inner.is_zero()) continue;
    for (long k = 0; k <= cols - s - 1; ++k) {
      RecursionKey child{key.family, 0, 0, static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(k)};
      if (tilde) {
        child.first = static_cast<std::uint32_t>(cols - s);
        child.second = static_cast<std::uint32_t>(rows - r);
      } else {
        child.first = static_cast<std::uint32_t>(rows - r);
        child.second = static_cast<std::uint32_t>(cols - s);
      }
      sum += inner * evaluate(child);
    }
  }
  return sum.shifted(static_cast<std::uint32_t>(r + s), size);
}

QTPolynomial RecursionEngine::compute_para(const RecursionKey& key) {
  const long a = key.first;
  const long b = key.second;
  const long r = key.r;
  const long s = key.s;

  if (s == b) return r == a ? q_binomial_or_zero(a + b, a) : QTPolynomial{};
  if (a == 0) return {};
  if (r == 0 && s == 0) return {};

  QTPolynomial sum;
  const QTPolynomial outer = q_binomial_or_zero(r + s, r);
  for (long k = 1; k <= b - s; ++k) {
    const QTPolynomial inner = outer * q_binomial_or_zero(r + k - 1, k);
    if (inner.is_zero()) continue;
    for (long h = 0; h <= a - r; ++h) {
      RecursionKey child{Family::Para, static_cast<std::uint32_t>(a - r), static_cast<std::uint32_t>(b - s - 1),
                         static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(k - 1)};
      sum += inner * evaluate(child);
    }
  }
  return sum.shifted(0, static_cast<std::uint32_t>(a + b - r - s));
}

QTPolynomial RecursionEngine::total(Family family, std::uint32_t first, std::uint32_t second) {
  QTPolynomial sum;
  for (std::uint32_t r = 0; r <= std::max(first, second); ++r) {
    for (std::uint32_t s = 0; s <= std::max(first, second); ++s) {
      RecursionKey key{family, first, second, r, s};
      if (in_range(key)) sum += evaluate(key);
    }
  }
  return sum;
}

QTPolynomial tilde_nara_rs(std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t s) {
  return RecursionEngine().tilde_nara_rs(m, n, r, s);
}

QTPolynomial nara_rs(std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t s) {
  return RecursionEngine().nara_rs(m, n, r, s);
}

QTPolynomial para_rs_rec(std::uint32_t a, std::uint32_t b, std::uint32_t r, std::uint32_t s) {
  return RecursionEngine().para_rs(a, b, r, s);
}

WordPeel word_peel(const AreaWord& w) {
  WordPeel out;
  bool any_unbarred = false;
  for (const auto& l : w.letters()) {
    if (l.value == 2) (l.barred ? out.k : out.h) += 1;
    if (l == Letter::bar(0)) {
      out.word.push_back(l);
    } else if (l.value >= 2) {
      out.word.push_back(Letter{l.value - 1, l.barred});
      any_unbarred |= !l.barred;
    }
  }
  if (!any_unbarred) out.word.clear();
  return out;
}

QTPolynomial nara_total(std::uint32_t m, std::uint32_t n, Method method) {
  if (m == 0 || n == 0) throw ValidationError("Nara_{m,n} needs m >= 1 and n >= 1");
  if (method == Method::Enumeration) return nara_enum(m, n);
  return RecursionEngine().total(Family::Nara, m, n);
}

QTPolynomial nabla_pairing(std::uint32_t m, std::uint32_t n, Method method) {
  if (m == 0 || n == 0) throw ValidationError("the pairing needs m >= 1 and n >= 1");
  if (m == 1 && n == 1) return QTPolynomial(1);
  if (method == Method::Enumeration) return para_poly(n - 1, m - 1);
  return RecursionEngine().total(Family::Para, n - 1, m - 1);
}

}  // namespace narayana
