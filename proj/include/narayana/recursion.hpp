#pragma once

#include "narayana/polyomino.hpp"
#include "narayana/qtpoly.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace narayana {

enum class Family { TildeNara, Nara, Para };

const char* family_name(Family f);

/**
 * A refined generating function.  For TildeNara and Nara, `first` is the
 * box width and `second` its height; for Para they are the block sizes
 * (a, b).  (r, s) is the refinement.
 */
struct RecursionKey {
  Family family = Family::Nara;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;

  friend auto operator<=>(const RecursionKey&, const RecursionKey&) = default;
};

/// True iff (r, s) is inside the family's summation range for the box.
bool in_range(const RecursionKey& key);

/**
 * Evaluates the refined recursions.  With memoization on, every value is
 * computed once per engine; the cache is guarded by a mutex so one engine can
 * be shared between threads.
 *
 *   tildeNara^{(r,s)}_{m,n}  1 <= r <= n, 0 <= s <= m-1   (bounce-path runs)
 *   Nara^{(r,s)}_{m,n}       1 <= r <= m, 0 <= s <= n-1   (letters 1 and 1b)
 *   Para^{(r,s)}_{a,b}       0 <= r <= a, 0 <= s <= b     (level-0 cars)
 */
class RecursionEngine {
 public:
  explicit RecursionEngine(bool memoize = true) : memoize_(memoize) {}

  /// Throws ValidationError for parameters outside the family's range.
  QTPolynomial evaluate(const RecursionKey& key);

  QTPolynomial tilde_nara_rs(std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t s) {
    return evaluate({Family::TildeNara, m, n, r, s});
  }
  QTPolynomial nara_rs(std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t s) {
    return evaluate({Family::Nara, m, n, r, s});
  }
  QTPolynomial para_rs(std::uint32_t a, std::uint32_t b, std::uint32_t r, std::uint32_t s) {
    return evaluate({Family::Para, a, b, r, s});
  }

  /// Sum of every refinement of the family at the given box.
  QTPolynomial total(Family family, std::uint32_t first, std::uint32_t second);

  std::size_t cache_size() const;

 private:
  QTPolynomial compute(const RecursionKey& key);
  QTPolynomial compute_nara_like(const RecursionKey& key);
  QTPolynomial compute_para(const RecursionKey& key);

  bool memoize_;
  mutable std::mutex mutex_;
  std::map<RecursionKey, QTPolynomial> cache_;
};

// One-shot helpers, each with a fresh engine.
QTPolynomial tilde_nara_rs(std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t s);
QTPolynomial nara_rs(std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t s);
QTPolynomial para_rs_rec(std::uint32_t a, std::uint32_t b, std::uint32_t r, std::uint32_t s);

/// Area-word peel: drop every 1 and 1b, lower the remaining letters by one
/// (0b stays 0b).  h and k count the 2's and 2b's of the input.  Returns an
/// empty word when no letter of value >= 2 is present.
struct WordPeel {
  std::vector<Letter> word;
  std::uint32_t h = 0;
  std::uint32_t k = 0;
};
WordPeel word_peel(const AreaWord& w);

enum class Method { Enumeration, Recursion };

/// Nara_{m,n} = sum of q^dinv t^area over Polyo_{m,n}, by either method.
QTPolynomial nara_total(std::uint32_t m, std::uint32_t n, Method method);

/// <nabla e_{m+n-2}, h_{m-1} h_{n-1}>, represented by its combinatorial
/// value Para_{n-1,m-1}(q,t); 1 for m = n = 1.
QTPolynomial nabla_pairing(std::uint32_t m, std::uint32_t n, Method method = Method::Enumeration);

}  // namespace narayana
