#include "narayana/cli.hpp"

#include "narayana/bijections.hpp"
#include "narayana/dyck.hpp"
#include "narayana/errors.hpp"
#include "narayana/parking.hpp"
#include "narayana/polyomino.hpp"
#include "narayana/recursion.hpp"
#include "narayana/serialize.hpp"
#include "narayana/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstring>
#include <optional>
#include <ostream>

namespace narayana {

unsigned threads_from_env(const char* value) {
  if (value == nullptr) return 0;
  unsigned parsed = 0;
  const char* end = value + std::strlen(value);
  auto [ptr, ec] = std::from_chars(value, end, parsed);
  if (ec != std::errc{} || ptr != end) return 0;
  return parsed;
}

namespace {

struct Options {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> a;
  std::optional<std::uint32_t> b;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> s;
  std::string family = "nara";
  std::string method = "enumerate";
  std::string format = "text";
  std::string direction = "forward";
  std::uint32_t max_total = 6;
  std::vector<std::string> checks;
  std::vector<std::string> word;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

AreaWord read_word(const std::vector<std::string>& tokens) { return AreaWord(parse_letters(join(tokens))); }

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for_each_area_word(o.m, o.n, [&](const AreaWord& w) { arr.push_back(format_word(w)); });
    out << arr.dump() << '\n';
  } else {
    for_each_area_word(o.m, o.n, [&](const AreaWord& w) { out << format_word(w) << '\n'; });
  }
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const AreaWord w = read_word(o.word);
  const Polyomino p = word_to_polyomino(w);
  const auto a = area(w), d = dinv(w), b = bounce(p);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["m"] = w.width();
    doc["n"] = w.height();
    doc["area"] = a;
    doc["dinv"] = d;
    doc["bounce"] = b;
    out << doc.dump() << '\n';
  } else {
    out << "m=" << w.width() << " n=" << w.height() << " area=" << a << " dinv=" << d << " bounce=" << b << '\n';
  }
  return kExitOk;
}

Family parse_family(const std::string& name) {
  if (name == "nara") return Family::Nara;
  if (name == "tilde-nara") return Family::TildeNara;
  return Family::Para;
}

int cmd_poly(const Options& o, std::ostream& out) {
  PolynomialContext ctx;
  ctx.family = parse_family(o.family);
  if (ctx.family == Family::Para) {
    if (!o.a || !o.b) throw ValidationError("para needs --a and --b");
    ctx.first = *o.a;
    ctx.second = *o.b;
    if (ctx.first + ctx.second == 0) throw ValidationError("para needs a + b >= 1");
  } else {
    if (o.m == 0 || o.n == 0) throw ValidationError(o.family + " needs --m and --n, both >= 1");
    ctx.first = o.m;
    ctx.second = o.n;
  }
  if (o.r.has_value() != o.s.has_value()) throw ValidationError("--r and --s must be given together");
  if (o.r) {
    ctx.rs = OneCounts{*o.r, *o.s};
    if (!in_range({ctx.family, ctx.first, ctx.second, *o.r, *o.s})) {
      throw ValidationError("(r,s) = (" + std::to_string(*o.r) + "," + std::to_string(*o.s) +
                            ") is outside the summation range of " + o.family);
    }
  }

  QTPolynomial p;
  if (o.method == "recursion") {
    RecursionEngine engine;
    p = ctx.rs ? engine.evaluate({ctx.family, ctx.first, ctx.second, ctx.rs->r, ctx.rs->s})
               : engine.total(ctx.family, ctx.first, ctx.second);
  } else if (ctx.family == Family::Nara) {
    p = nara_enum(ctx.first, ctx.second, ctx.rs);
  } else if (ctx.family == Family::TildeNara) {
    p = tilde_nara_enum(ctx.first, ctx.second, ctx.rs);
  } else {
    p = para_poly(ctx.first, ctx.second, ctx.rs);
  }

  if (o.format == "json") {
    out << poly_to_json(p, ctx) << '\n';
  } else if (o.format == "latex") {
    out << poly_to_latex(p) << '\n';
  } else {
    out << poly_to_text(p, ctx);
  }
  return kExitOk;
}

int cmd_digamma(const Options& o, std::ostream& out) {
  const Polyomino p = word_to_polyomino(read_word(o.word));
  const Polyomino image = o.direction == "inverse" ? digamma_inverse(p) : digamma(p);
  const AreaWord w = area_word(image);
  if (o.format == "json") {
    out << nlohmann::json(format_word(w)).dump() << '\n';
  } else {
    out << format_word(w) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, unsigned threads) {
  const auto& checks = o.checks.empty() ? verification_checks() : o.checks;
  const auto results = run_verification(o.max_total, checks, threads);
  std::size_t failed = 0;
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json row;
      row["check"] = r.check;
      row["m"] = r.m;
      row["n"] = r.n;
      row["passed"] = r.passed;
      if (!r.passed) row["detail"] = r.detail;
      arr.push_back(std::move(row));
      failed += !r.passed;
    }
    out << arr.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check << " m=" << r.m << " n=" << r.n;
      if (!r.passed) out << " : " << r.detail;
      out << '\n';
      failed += !r.passed;
    }
    out << results.size() - failed << '/' << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, unsigned threads) {
  CLI::App app{"Parallelogram polyominoes and their q,t-Narayana polynomials", "narayana"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json"};
  const std::vector<std::string> poly_formats{"text", "json", "latex"};

  auto* enumerate = app.add_subcommand("enumerate", "List the area words of every polyomino in the m x n box");
  enumerate->add_option("--m", o.m, "Box width")->required()->check(CLI::Range(1u, 64u));
  enumerate->add_option("--n", o.n, "Box height")->required()->check(CLI::Range(1u, 64u));
  enumerate->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* stats = app.add_subcommand("stats", "Area, dinv and bounce of the polyomino with the given area word");
  stats->add_option("word", o.word, "Area word, e.g. 0b 1 1b 2")->required();
  stats->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* poly = app.add_subcommand("poly", "Print a (refined) generating polynomial");
  poly->add_option("--family", o.family)->check(CLI::IsMember({"nara", "tilde-nara", "para"}));
  poly->add_option("--m", o.m, "Box width");
  poly->add_option("--n", o.n, "Box height");
  poly->add_option("--a", o.a, "Number of cars labelled 1 (para)");
  poly->add_option("--b", o.b, "Number of cars labelled 2 (para)");
  poly->add_option("--r", o.r, "Refinement: first count");
  poly->add_option("--s", o.s, "Refinement: second count");
  poly->add_option("--method", o.method)->check(CLI::IsMember({"enumerate", "recursion"}));
  poly->add_option("--format", o.format)->check(CLI::IsMember(poly_formats));

  auto* dig = app.add_subcommand("digamma", "Apply the digamma bijection to an area word");
  dig->add_option("word", o.word, "Area word")->required();
  dig->add_option("--direction", o.direction)->check(CLI::IsMember({"forward", "inverse"}));
  dig->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Check the identities on every box with m + n <= max-total");
  verify->add_option("--max-total", o.max_total)->check(CLI::Range(2u, 64u));
  verify->add_option("--checks", o.checks, "Comma-separated subset of the checks")
      ->delimiter(',')
      ->check(CLI::IsMember(verification_checks()));
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (poly->parsed()) return cmd_poly(o, out);
    if (dig->parsed()) return cmd_digamma(o, out);
    return cmd_verify(o, out, threads);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace narayana
