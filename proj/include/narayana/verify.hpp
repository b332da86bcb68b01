#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace narayana {

/// Names accepted by run_verification, in report order.
const std::vector<std::string>& verification_checks();

struct CheckResult {
  std::string check;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  bool passed = false;
  std::string detail;  // empty on success
};

/**
 * Runs each named check on every box (m, n) with m + n <= max_total.
 * Results come back sorted by (m + n, m, check order) no matter how many
 * worker threads were used.  Throws ValidationError on an unknown check name
 * or max_total < 2.
 *
 *   count        |Polyo_{m,n}| = N(m+n-1, m), also via the recursion at q=t=1
 *   adinba       Nara_{m,n} = tildeNara_{n,m}, every refinement included
 *   symmetry-qt  Nara_{m,n}(q,t) = Nara_{m,n}(t,q)
 *   symmetry-mn  Nara_{m,n} = Nara_{n,m} = tildeNara_{m,n}
 *   recursion    all three refined recursions against enumeration
 *   haglund      Nara_{m,n} = (qt)^{m+n-1} Para_{n-1,m-1}
 *   digamma      statistic transport, inverse, injectivity, digamma twice
 *   dyck         row reading of ptd(P) is the area word; dtp inverts ptd
 */
std::vector<CheckResult> run_verification(std::uint32_t max_total, const std::vector<std::string>& checks,
                                          unsigned threads = 0);

CheckResult run_check(const std::string& check, std::uint32_t m, std::uint32_t n);

}  // namespace narayana
