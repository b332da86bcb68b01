#include "narayana/bijections.hpp"
#include "narayana/dyck.hpp"
#include "narayana/parking.hpp"
#include "narayana/polyomino.hpp"
#include "narayana/recursion.hpp"
#include "narayana/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace narayana;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

// {(q_exp, t_exp): coefficient}
py::dict to_py(const QTPolynomial& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::make_tuple(e.q, e.t)] = to_py(c);
  return out;
}

AreaWord read_word(const std::string& text) { return AreaWord(parse_letters(text)); }

std::optional<OneCounts> refinement(std::optional<std::uint32_t> r, std::optional<std::uint32_t> s) {
  if (r.has_value() != s.has_value()) throw ValidationError("r and s must be given together");
  if (!r) return std::nullopt;
  return OneCounts{*r, *s};
}

Method parse_method(const std::string& m) {
  if (m == "enumerate") return Method::Enumeration;
  if (m == "recursion") return Method::Recursion;
  throw ValidationError("method must be 'enumerate' or 'recursion'");
}

QTPolynomial family_poly(Family family, std::uint32_t first, std::uint32_t second, std::optional<std::uint32_t> r,
                         std::optional<std::uint32_t> s, const std::string& method) {
  const auto rs = refinement(r, s);
  if (rs && !in_range({family, first, second, rs->r, rs->s})) throw ValidationError("(r,s) out of range");
  if (parse_method(method) == Method::Recursion) {
    RecursionEngine engine;
    return rs ? engine.evaluate({family, first, second, rs->r, rs->s}) : engine.total(family, first, second);
  }
  switch (family) {
    case Family::Nara:
      return nara_enum(first, second, rs);
    case Family::TildeNara:
      return tilde_nara_enum(first, second, rs);
    case Family::Para:
      break;
  }
  return para_poly(first, second, rs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallelogram polyominoes, their statistics and q,t-Narayana polynomials";

  m.def("narayana_count", [](std::uint32_t a, std::uint32_t b) { return to_py(narayana_count(a, b)); }, py::arg("a"),
        py::arg("b"), "N(a, b) = C(a,b) C(a,b-1) / a");

  m.def(
      "validate_area_word",
      [](const std::string& word) {
        const Dimensions d = validate_area_word(parse_letters(word));
        return py::make_tuple(d.m, d.n);
      },
      py::arg("word"), "Returns (m, n) or raises ValueError naming the broken condition.");

  m.def(
      "enumerate_area_words",
      [](std::uint32_t mm, std::uint32_t n) {
        std::vector<std::string> out;
        for_each_area_word(mm, n, [&](const AreaWord& w) { out.push_back(format_word(w)); });
        return out;
      },
      py::arg("m"), py::arg("n"));

  m.def(
      "stats",
      [](const std::string& word) {
        const AreaWord w = read_word(word);
        const Polyomino p = word_to_polyomino(w);
        py::dict out;
        out["m"] = w.width();
        out["n"] = w.height();
        out["area"] = area(w);
        out["dinv"] = dinv(w);
        out["bounce"] = bounce(p);
        return out;
      },
      py::arg("word"));

  m.def(
      "paths",
      [](const std::string& word) {
        const Polyomino p = word_to_polyomino(read_word(word));
        return py::make_tuple(format_path(p.upper()), format_path(p.lower()));
      },
      py::arg("word"), "(upper, lower) N/E step strings of the polyomino.");

  m.def(
      "area_word_of_paths",
      [](const std::string& upper, const std::string& lower) {
        return format_word(area_word(Polyomino::from_paths(parse_path(upper), parse_path(lower))));
      },
      py::arg("upper"), py::arg("lower"));

  m.def(
      "ptd", [](const std::string& word) { return format_dyck(ptd(word_to_polyomino(read_word(word)))); },
      py::arg("word"), "Dyck path of the polyomino as an R/F string.");

  m.def(
      "digamma",
      [](const std::string& word, bool inverse) {
        const Polyomino p = word_to_polyomino(read_word(word));
        return format_word(area_word(inverse ? digamma_inverse(p) : digamma(p)));
      },
      py::arg("word"), py::arg("inverse") = false);

  m.def(
      "nara",
      [](std::uint32_t mm, std::uint32_t n, std::optional<std::uint32_t> r, std::optional<std::uint32_t> s,
         const std::string& method) { return to_py(family_poly(Family::Nara, mm, n, r, s, method)); },
      py::arg("m"), py::arg("n"), py::arg("r") = py::none(), py::arg("s") = py::none(),
      py::arg("method") = "enumerate");

  m.def(
      "tilde_nara",
      [](std::uint32_t mm, std::uint32_t n, std::optional<std::uint32_t> r, std::optional<std::uint32_t> s,
         const std::string& method) { return to_py(family_poly(Family::TildeNara, mm, n, r, s, method)); },
      py::arg("m"), py::arg("n"), py::arg("r") = py::none(), py::arg("s") = py::none(),
      py::arg("method") = "enumerate");

  m.def(
      "para",
      [](std::uint32_t a, std::uint32_t b, std::optional<std::uint32_t> r, std::optional<std::uint32_t> s,
         const std::string& method) {
        if (a + b == 0) throw ValidationError("para needs a + b >= 1");
        return to_py(family_poly(Family::Para, a, b, r, s, method));
      },
      py::arg("a"), py::arg("b"), py::arg("r") = py::none(), py::arg("s") = py::none(),
      py::arg("method") = "enumerate");

  m.def(
      "parking_stats",
      [](const std::vector<std::uint32_t>& cars, const std::vector<std::uint32_t>& levels) {
        const ParkingFunction pf(cars, levels);
        py::dict out;
        out["reading_word"] = reading_word(pf);
        out["area"] = pf_area(pf);
        out["dinv"] = pf_dinv(pf);
        return out;
      },
      py::arg("cars"), py::arg("levels"));

  m.def(
      "verify",
      [](std::uint32_t max_total, std::optional<std::vector<std::string>> checks, unsigned threads) {
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_verification(max_total, checks ? *checks : verification_checks(), threads);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict row;
          row["check"] = r.check;
          row["m"] = r.m;
          row["n"] = r.n;
          row["passed"] = r.passed;
          row["detail"] = r.detail;
          out.append(row);
        }
        return out;
      },
      py::arg("max_total"), py::arg("checks") = py::none(), py::arg("threads") = 0);

  m.attr("CHECKS") = verification_checks();
}
