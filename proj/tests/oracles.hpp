// Slow, independent reference implementations used only by the tests.  None
// of these call into the library's versions of the same computation.
#pragma once

#include "narayana/parking.hpp"
#include "narayana/polyomino.hpp"
#include "narayana/qtpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using narayana::BigInt;
using narayana::Letter;
using narayana::Path;
using narayana::Polyomino;
using narayana::QTPolynomial;
using narayana::Step;

// Univariate polynomials in q as dense coefficient vectors.
using Dense = std::vector<BigInt>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Dense dense_factorial(unsigned n) {
  Dense acc{1};
  for (unsigned i = 1; i <= n; ++i) acc = dense_mul(acc, Dense(i, 1));
  return acc;
}

// Exact long division; the tests require the remainder to vanish.
inline std::pair<Dense, Dense> dense_divmod(Dense num, const Dense& den) {
  if (num.size() < den.size()) return {Dense{0}, num};
  Dense quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return {quot, num};
}

inline QTPolynomial from_dense(const Dense& d) {
  QTPolynomial p;
  for (std::size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<std::uint32_t>(i), 0, d[i]);
  return p;
}

// [n]! / ([k]! [n-k]!) by polynomial division.
inline QTPolynomial q_binomial_by_quotient(unsigned n, unsigned k) {
  auto [quot, rem] = dense_divmod(dense_factorial(n), dense_mul(dense_factorial(k), dense_factorial(n - k)));
  for (const auto& r : rem) {
    if (r != 0) throw std::logic_error("inexact q-binomial division");
  }
  return from_dense(quot);
}

// All i < j with rank(a_j) = rank(a_i) + 1; second member counts pairs whose
// first letter is 0b.
inline std::pair<unsigned, unsigned> dinv_pairs(const std::vector<Letter>& w) {
  unsigned all = 0, with_zero = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].rank() == w[i].rank() + 1) {
        ++all;
        with_zero += w[i] == Letter::bar(0);
      }
    }
  }
  return {all, with_zero};
}

inline std::vector<std::pair<int, int>> lattice_points(const Path& p) {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  for (auto s : p) {
    auto [x, y] = pts.back();
    pts.push_back(s == Step::N ? std::pair{x, y + 1} : std::pair{x + 1, y});
  }
  return pts;
}

// Interior cells by ray casting the cell centre against the closed boundary
// (upper path forward, lower path backward).
inline unsigned interior_cells_by_ray_casting(const Polyomino& p) {
  auto up = lattice_points(p.upper());
  auto lo = lattice_points(p.lower());
  std::vector<std::pair<int, int>> poly(up.begin(), up.end());
  for (auto it = lo.rbegin() + 1; it != lo.rend(); ++it) poly.push_back(*it);
  unsigned count = 0;
  for (unsigned cx = 0; cx < p.width(); ++cx) {
    for (unsigned cy = 0; cy < p.height(); ++cy) {
      const double x = cx + 0.5, y = cy + 0.5;
      bool inside = false;
      for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const double xi = poly[i].first, yi = poly[i].second, xj = poly[j].first, yj = poly[j].second;
        if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi) inside = !inside;
      }
      count += inside;
    }
  }
  return count;
}

// Every pair of N/E paths in the box that forms a parallelogram polyomino,
// found by brute force over all path pairs.
inline std::set<Polyomino> polyominoes_by_path_pairs(unsigned m, unsigned n) {
  std::vector<Path> paths;
  Path base(n, Step::N);
  base.insert(base.end(), m, Step::E);
  std::sort(base.begin(), base.end());
  do paths.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  std::set<Polyomino> out;
  for (const auto& u : paths) {
    for (const auto& l : paths) {
      auto pu = lattice_points(u), pl = lattice_points(l);
      bool ok = true;
      for (std::size_t i = 1; i + 1 < pu.size() && ok; ++i) {
        ok = pu[i].second > pl[i].second;  // same anti-diagonal, upper strictly higher
      }
      if (ok) out.insert(Polyomino::from_paths(u, l));
    }
  }
  return out;
}

// Ray walk over explicit lattice points.  Returns (horizontal, vertical) run
// lengths.
inline std::pair<std::vector<unsigned>, std::vector<unsigned>> bounce_runs(const Polyomino& p) {
  auto up = lattice_points(p.upper());
  auto lo = lattice_points(p.lower());
  const int m = static_cast<int>(p.width()), n = static_cast<int>(p.height());
  std::vector<unsigned> h{1}, v;
  int x = 1, y = 0;
  while (x != m || y != n) {
    // North to the height of the upper path above column [x-1, x].
    int top = -1;
    for (std::size_t i = 0; i + 1 < up.size(); ++i) {
      if (up[i].first == x - 1 && up[i + 1].first == x) top = up[i].second;
    }
    v.push_back(static_cast<unsigned>(top - y));
    y = top;
    if (x == m && y == n) break;
    // East to the lower path's vertical step ending at height y.
    int right = -1;
    for (std::size_t i = 0; i + 1 < lo.size(); ++i) {
      if (lo[i + 1].second == y && lo[i].second == y - 1) right = lo[i].first;
    }
    h.push_back(static_cast<unsigned>(right - x));
    x = right;
  }
  return {h, v};
}

inline unsigned bounce_from_runs(const std::vector<unsigned>& h, const std::vector<unsigned>& v) {
  unsigned total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) total += static_cast<unsigned>(i) * h[i];
  for (std::size_t i = 0; i < v.size(); ++i) total += static_cast<unsigned>(i + 1) * v[i];
  return total;
}

// Full-car parking functions by brute force: every Dyck level sequence times
// every permutation of the cars, filtered by the car-increase rule and the
// shuffle condition on the reading word.
struct FullPF {
  std::vector<unsigned> cars;
  std::vector<unsigned> levels;
};

inline std::vector<unsigned> reading_order(const std::vector<unsigned>& levels) {
  std::vector<unsigned> idx(levels.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) {
    return levels[a] != levels[b] ? levels[a] > levels[b] : a > b;
  });
  return idx;
}

inline void level_sequences(unsigned k, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  const unsigned hi = cur.empty() ? 0 : cur.back() + 1;
  for (unsigned l = 0; l <= hi; ++l) {
    cur.push_back(l);
    level_sequences(k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<FullPF> park_brute(unsigned a, unsigned b) {
  const unsigned k = a + b;
  std::vector<std::vector<unsigned>> levels;
  std::vector<unsigned> cur;
  level_sequences(k, cur, levels);
  std::vector<FullPF> out;
  for (const auto& lv : levels) {
    std::vector<unsigned> cars(k);
    std::iota(cars.begin(), cars.end(), 1u);
    do {
      bool ok = true;
      for (unsigned i = 0; i + 1 < k && ok; ++i) ok = !(lv[i] < lv[i + 1] && cars[i] > cars[i + 1]);
      if (!ok) continue;
      unsigned next_a = 1, next_b = a + 1;
      for (unsigned i : reading_order(lv)) {
        if (cars[i] <= a) {
          ok = ok && cars[i] == next_a++;
        } else {
          ok = ok && cars[i] == next_b++;
        }
      }
      if (ok) out.push_back({cars, lv});
    } while (std::next_permutation(cars.begin(), cars.end()));
  }
  return out;
}

inline unsigned full_area(const FullPF& pf) { return std::accumulate(pf.levels.begin(), pf.levels.end(), 0u); }

inline unsigned full_dinv(const FullPF& pf) {
  unsigned d = 0;
  for (std::size_t i = 0; i < pf.cars.size(); ++i) {
    for (std::size_t j = i + 1; j < pf.cars.size(); ++j) {
      if (pf.levels[i] == pf.levels[j] && pf.cars[i] < pf.cars[j]) ++d;
      if (pf.levels[i] == pf.levels[j] + 1 && pf.cars[i] > pf.cars[j]) ++d;
    }
  }
  return d;
}

inline QTPolynomial para_brute(unsigned a, unsigned b, int r = -1, int s = -1) {
  QTPolynomial p;
  for (const auto& pf : park_brute(a, b)) {
    if (r >= 0) {
      int zr = 0, zs = 0;
      for (std::size_t i = 0; i < pf.cars.size(); ++i) {
        if (pf.levels[i] == 0) (pf.cars[i] <= a ? zr : zs) += 1;
      }
      if (zr != r || zs != s) continue;
    }
    p.add_term(full_dinv(pf), full_area(pf), 1);
  }
  return p;
}

}  // namespace oracle
