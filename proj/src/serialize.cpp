#include "narayana/serialize.hpp"

#include "narayana/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace narayana {

namespace {

std::string header(const PolynomialContext& ctx) {
  const bool para = ctx.family == Family::Para;
  std::ostringstream os;
  os << "# " << family_name(ctx.family) << ' ' << (para ? "a=" : "m=") << ctx.first << ' '
     << (para ? "b=" : "n=") << ctx.second;
  if (ctx.rs) os << " r=" << ctx.rs->r << " s=" << ctx.rs->s;
  return os.str();
}

}  // namespace

std::string poly_to_text(const QTPolynomial& p, const PolynomialContext& ctx) {
  std::ostringstream os;
  os << header(ctx) << '\n';
  for (const auto& [e, c] : p.terms()) os << e.q << ' ' << e.t << ' ' << c << '\n';
  return os.str();
}

std::string poly_to_json(const QTPolynomial& p, const PolynomialContext& ctx) {
  const bool para = ctx.family == Family::Para;
  nlohmann::ordered_json doc;
  doc["family"] = family_name(ctx.family);
  doc[para ? "a" : "m"] = ctx.first;
  doc[para ? "b" : "n"] = ctx.second;
  if (ctx.rs) {
    doc["r"] = ctx.rs->r;
    doc["s"] = ctx.rs->s;
  }
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.q, e.t, c.str()});
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string poly_to_latex(const QTPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c < 0 ? "-" : "+");
    if (first && c < 0) os << '-';
    first = false;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (mag != 1 || (e.q == 0 && e.t == 0)) os << mag;
    if (e.q) os << "q^{" << e.q << '}';
    if (e.t) os << "t^{" << e.t << '}';
  }
  return os.str();
}

QTPolynomial poly_from_text(const std::string& text) {
  QTPolynomial out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::uint32_t q = 0, t = 0;
    std::string coeff;
    if (!(ls >> q >> t >> coeff)) throw ValidationError("bad polynomial term line '" + line + "'");
    out.add_term(q, t, BigInt(coeff));
  }
  return out;
}

QTPolynomial poly_from_json(const std::string& text) {
  QTPolynomial out;
  auto doc = nlohmann::json::parse(text);
  for (const auto& term : doc.at("terms")) {
    out.add_term(term.at(0).get<std::uint32_t>(), term.at(1).get<std::uint32_t>(),
                 BigInt(term.at(2).get<std::string>()));
  }
  return out;
}

}  // namespace narayana
