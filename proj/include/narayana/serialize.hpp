#pragma once

#include "narayana/polyomino.hpp"
#include "narayana/qtpoly.hpp"
#include "narayana/recursion.hpp"

#include <optional>
#include <string>

namespace narayana {

/// What a serialized polynomial is the value of.  For Para the box is
/// (a, b); otherwise (m, n).
struct PolynomialContext {
  Family family = Family::Nara;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::optional<OneCounts> rs;
};

/**
 * Text form: a header line, then one "q_exp t_exp coefficient" line per term
 * in canonical order.
 *
 *     # nara m=2 n=2
 *     3 3 1
 *     3 4 1
 *     4 3 1
 */
std::string poly_to_text(const QTPolynomial& p, const PolynomialContext& ctx);

/// {"family":..,"m":..,"n":..[,"r":..,"s":..],"terms":[[q,t,"coeff"],..]}
/// with "a"/"b" in place of "m"/"n" for Para.  Coefficients are decimal
/// strings.
std::string poly_to_json(const QTPolynomial& p, const PolynomialContext& ctx);

/// "q^{3}t^{3}+q^{4}t^{3}"; display only.
std::string poly_to_latex(const QTPolynomial& p);

/// Reads the term lines of poly_to_text output (header ignored).
QTPolynomial poly_from_text(const std::string& text);
QTPolynomial poly_from_json(const std::string& text);

}  // namespace narayana
