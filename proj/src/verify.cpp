#include "narayana/verify.hpp"

#include "narayana/bijections.hpp"
#include "narayana/dyck.hpp"
#include "narayana/errors.hpp"
#include "narayana/parking.hpp"
#include "narayana/polyomino.hpp"
#include "narayana/recursion.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace narayana {

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names{"count",    "adinba",   "symmetry-qt", "symmetry-mn",
                                              "recursion", "haglund", "digamma",     "dyck"};
  return names;
}

namespace {

std::string box(std::uint32_t m, std::uint32_t n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string check_count(std::uint32_t m, std::uint32_t n) {
  const BigInt expected = narayana_count(m + n - 1, m);
  std::size_t seen = 0;
  for_each_area_word(m, n, [&](const AreaWord&) { ++seen; });
  if (BigInt(seen) != expected) return "enumerated " + std::to_string(seen) + ", expected " + expected.str();
  const BigInt by_recursion = nara_total(m, n, Method::Recursion).eval_ones();
  if (by_recursion != expected) return "recursion total at q=t=1 is " + by_recursion.str();
  return {};
}

std::string check_adinba(std::uint32_t m, std::uint32_t n) {
  if (nara_enum(m, n) != tilde_nara_enum(n, m)) return "Nara" + box(m, n) + " != tildeNara" + box(n, m);
  // Refinement: Nara^{(r,s)} on the m x n box vs tildeNara^{(r,s)} on n x m.
  for (std::uint32_t r = 1; r <= m; ++r) {
    for (std::uint32_t s = 0; s < n; ++s) {
      if (nara_enum(m, n, OneCounts{r, s}) != tilde_nara_enum(n, m, OneCounts{r, s})) {
        return "refinement (" + std::to_string(r) + "," + std::to_string(s) + ") differs";
      }
    }
  }
  return {};
}

std::string check_symmetry_qt(std::uint32_t m, std::uint32_t n) {
  const QTPolynomial p = nara_enum(m, n);
  return p == p.swapped() ? std::string{} : "Nara" + box(m, n) + " is not symmetric in q and t";
}

std::string check_symmetry_mn(std::uint32_t m, std::uint32_t n) {
  const QTPolynomial p = nara_enum(m, n);
  if (p != nara_enum(n, m)) return "Nara" + box(m, n) + " != Nara" + box(n, m);
  if (p != tilde_nara_enum(m, n)) return "Nara" + box(m, n) + " != tildeNara" + box(m, n);
  return {};
}

std::string check_recursion(std::uint32_t m, std::uint32_t n) {
  RecursionEngine engine;
  auto tag = [](const char* what, std::uint32_t r, std::uint32_t s) {
    return std::string(what) + " (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
  };
  for (std::uint32_t r = 0; r <= std::max(m, n); ++r) {
    for (std::uint32_t s = 0; s <= std::max(m, n); ++s) {
      const OneCounts rs{r, s};
      if (in_range({Family::TildeNara, m, n, r, s})) {
        const QTPolynomial rec = engine.tilde_nara_rs(m, n, r, s);
        if (rec != tilde_nara_enum(m, n, rs)) return tag("tildeNara recursion", r, s);
        if (rec != engine.nara_rs(n, m, r, s)) return tag("Nara/tildeNara recursions disagree", r, s);
      }
      if (in_range({Family::Nara, m, n, r, s}) && engine.nara_rs(m, n, r, s) != nara_enum(m, n, rs)) {
        return tag("Nara recursion", r, s);
      }
      if (m + n >= 3 && in_range({Family::Para, n - 1, m - 1, r, s})) {
        const QTPolynomial para = engine.para_rs(n - 1, m - 1, r, s);
        if (para != para_poly(n - 1, m - 1, rs)) return tag("Para recursion", r, s);
        const auto shift = m + n - 1;
        if (para.shifted(shift, shift) != engine.nara_rs(m, n, s + 1, r)) return tag("(qt)^{m+n-1} Para", r, s);
      }
    }
  }
  return {};
}

std::string check_haglund(std::uint32_t m, std::uint32_t n) {
  const auto shift = m + n - 1;
  const QTPolynomial rhs = nabla_pairing(m, n).shifted(shift, shift);
  if (nara_total(m, n, Method::Enumeration) != rhs) return "Nara" + box(m, n) + " != (qt)^{m+n-1} Para";
  if (nara_total(m, n, Method::Recursion) != rhs) return "recursive Nara" + box(m, n) + " != (qt)^{m+n-1} Para";
  return {};
}

std::string check_digamma(std::uint32_t m, std::uint32_t n) {
  std::set<Polyomino> images;
  std::size_t count = 0;
  for (const auto& p : enumerate_polyominoes(m, n)) {
    ++count;
    const AreaWord source = area_word(p);
    const Polyomino q = digamma(p);
    const AreaWord image = area_word(q);
    if (q.width() != n || q.height() != m) return "image has the wrong box";
    if (area(image) != bounce(p)) return "area(digamma P) != bounce(P) for " + format_word(source);
    if (dinv(image) != area(source)) return "dinv(digamma P) != area(P) for " + format_word(source);
    if (!(digamma_inverse(q) == p)) return "digamma_inverse does not invert for " + format_word(source);
    if (dinv(area_word(digamma(q))) != bounce(p)) return "dinv(digamma^2 P) != bounce(P) for " + format_word(source);
    const Polyomino flipped = transpose_flip(digamma_inverse(p));
    if (flipped.width() != m || area(area_word(flipped)) != dinv(source)) {
      return "area(flip(digamma^-1 P)) != dinv(P) for " + format_word(source);
    }
    images.insert(q);
  }
  if (images.size() != count) return "digamma is not injective";
  return {};
}

std::string check_dyck(std::uint32_t m, std::uint32_t n) {
  std::size_t count = 0;
  for (const auto& p : enumerate_polyominoes(m, n)) {
    ++count;
    const DyckPath d = ptd(p);
    const AreaWord w = area_word(p);
    if (!d.is_polyomino_path()) return "ptd image breaks the parity/no-return invariants";
    if (dyck_to_area_word(d) != w.letters()) return "row reading differs from the area word " + format_word(w);
    if (!(dtp(d) == p)) return "dtp(ptd(P)) != P";
    if (!(word_to_polyomino(w) == p)) return "word_to_polyomino(area_word(P)) != P";
  }
  // Every Dyck path with the right rise parities and no early return is hit.
  std::size_t characterized = 0;
  for_each_dyck_path(m + n, [&](const DyckPath& d) {
    if (!d.is_polyomino_path()) return;
    std::size_t even = 0;
    for (std::size_t i = 1; i < d.size(); i += 2) even += d.steps()[i] == DyckStep::Rise;
    characterized += even == m;
  });
  if (characterized != count) {
    return std::to_string(characterized) + " characterized Dyck paths vs " + std::to_string(count) + " polyominoes";
  }
  return {};
}

}  // namespace

CheckResult run_check(const std::string& check, std::uint32_t m, std::uint32_t n) {
  CheckResult res{check, m, n, false, {}};
  try {
    if (check == "count") {
      res.detail = check_count(m, n);
    } else if (check == "adinba") {
      res.detail = check_adinba(m, n);
    } else if (check == "symmetry-qt") {
      res.detail = check_symmetry_qt(m, n);
    } else if (check == "symmetry-mn") {
      res.detail = check_symmetry_mn(m, n);
    } else if (check == "recursion") {
      res.detail = check_recursion(m, n);
    } else if (check == "haglund") {
      res.detail = check_haglund(m, n);
    } else if (check == "digamma") {
      res.detail = check_digamma(m, n);
    } else if (check == "dyck") {
      res.detail = check_dyck(m, n);
    } else {
      throw ValidationError("unknown check '" + check + "'");
    }
  } catch (const ValidationError&) {
    if (std::find(verification_checks().begin(), verification_checks().end(), check) == verification_checks().end()) {
      throw;
    }
    res.detail = "unexpected validation error";
  } catch (const std::exception& e) {
    res.detail = std::string("exception: ") + e.what();
  }
  res.passed = res.detail.empty();
  return res;
}

std::vector<CheckResult> run_verification(std::uint32_t max_total, const std::vector<std::string>& checks,
                                          unsigned threads) {
  if (max_total < 2) throw ValidationError("max_total must be at least 2");
  const auto& known = verification_checks();
  for (const auto& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) throw ValidationError("unknown check '" + c + "'");
  }

  struct Task {
    std::uint32_t m, n;
    std::size_t check_index;
  };
  std::vector<Task> tasks;
  for (std::uint32_t total = 2; total <= max_total; ++total) {
    for (std::uint32_t m = 1; m < total; ++m) {
      for (std::size_t c = 0; c < checks.size(); ++c) tasks.push_back({m, total - m, c});
    }
  }

  std::vector<CheckResult> results(tasks.size());
  auto run_task = [&](std::size_t i) { results[i] = run_check(checks[tasks[i].check_index], tasks[i].m, tasks[i].n); };

  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace narayana
