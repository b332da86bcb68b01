#include "narayana/cli.hpp"
#include "narayana/errors.hpp"
#include "narayana/serialize.hpp"
#include "narayana/verify.hpp"

#include "fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace narayana;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, unsigned threads = 0) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, threads);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> with_word(std::vector<std::string> head, const char* word) {
  for (auto& tok : split(word)) head.push_back(tok);
  return head;
}

}  // namespace

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--m", "1", "--n", "1"}).out == "0b 1\n");
  const Run two = run({"enumerate", "--m", "2", "--n", "2"});
  CHECK(two.code == 0);
  CHECK(two.out == "0b 1 1 1b\n0b 1 1b 1\n0b 1 1b 2\n");
  const auto doc = nlohmann::json::parse(run({"enumerate", "--m", "3", "--n", "3", "--format", "json"}).out);
  CHECK(doc.size() == 20);
  CHECK(run({"enumerate", "--m", "0", "--n", "2"}).code == kExitUsage);
  CHECK(run({"enumerate", "--m", "2"}).code == kExitUsage);
  CHECK(run({"enumerate", "--m", "2", "--n", "2", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("stats") {
  CHECK(run(with_word({"stats"}, fixtures::kFigureWord)).out == "m=12 n=7 area=30 dinv=35 bounce=41\n");
  CHECK(run({"stats", "0b 1"}).out == "m=1 n=1 area=1 dinv=1 bounce=1\n");
  CHECK(run({"stats", "0b", "1", "--format", "json"}).out == R"({"m":1,"n":1,"area":1,"dinv":1,"bounce":1})"
                                                            "\n");
  const Run bad = run({"stats", "0b", "1b", "1"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("condition 3") != std::string::npos);
  CHECK(run({"stats", "0b", "q"}).code == kExitUsage);
  CHECK(run({"stats"}).code == kExitUsage);
}

TEST_CASE("poly examples") {
  CHECK(run({"poly", "--family", "nara", "--m", "2", "--n", "2"}).out == "# nara m=2 n=2\n3 3 1\n3 4 1\n4 3 1\n");
  CHECK(run({"poly", "--family", "para", "--a", "1", "--b", "1", "--format", "json"}).out ==
        R"({"family":"para","a":1,"b":1,"terms":[[0,0,"1"],[0,1,"1"],[1,0,"1"]]})"
        "\n");
  CHECK(run({"poly", "--m", "1", "--n", "2", "--format", "json"}).out ==
        R"({"family":"nara","m":1,"n":2,"terms":[[2,2,"1"]]})"
        "\n");
  CHECK(run({"poly", "--m", "2", "--n", "2", "--format", "latex"}).out == "q^{3}t^{3}+q^{3}t^{4}+q^{4}t^{3}\n");
  CHECK(run({"poly", "--m", "2", "--n", "2", "--r", "2", "--s", "1", "--format", "json"}).out ==
        R"({"family":"nara","m":2,"n":2,"r":2,"s":1,"terms":[[3,3,"1"],[4,3,"1"]]})"
        "\n");
}

TEST_CASE("poly output is identical across methods") {
  for (const char* family : {"nara", "tilde-nara"}) {
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned n = 1; m + n <= 7; ++n) {
        std::vector<std::string> base{"poly", "--family", family, "--m", std::to_string(m), "--n", std::to_string(n)};
        auto with = [&](const char* method, const char* format) {
          auto args = base;
          args.insert(args.end(), {"--method", method, "--format", format});
          return run(args).out;
        };
        for (const char* format : {"text", "json", "latex"}) CHECK(with("enumerate", format) == with("recursion", format));
        for (unsigned r = 1; r <= std::max(m, n); ++r) {
          for (unsigned s = 0; s < std::max(m, n); ++s) {
            auto args = base;
            args.insert(args.end(), {"--r", std::to_string(r), "--s", std::to_string(s)});
            auto rec = args;
            rec.insert(rec.end(), {"--method", "recursion"});
            const Run a = run(args), b = run(rec);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
          }
        }
      }
    }
  }
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; a + b <= 4; ++b) {
      if (a + b == 0) continue;
      std::vector<std::string> base{"poly", "--family", "para", "--a", std::to_string(a), "--b", std::to_string(b)};
      auto rec = base;
      rec.insert(rec.end(), {"--method", "recursion"});
      CHECK(run(base).out == run(rec).out);
    }
  }
}

TEST_CASE("poly rejects bad parameters") {
  CHECK(run({"poly", "--m", "2", "--n", "2", "--r", "0", "--s", "0"}).code == kExitUsage);
  CHECK(run({"poly", "--m", "2", "--n", "2", "--r", "0", "--s", "0", "--method", "recursion"}).code == kExitUsage);
  CHECK(run({"poly", "--m", "2", "--n", "2", "--r", "1"}).code == kExitUsage);
  CHECK(run({"poly", "--m", "2"}).code == kExitUsage);
  CHECK(run({"poly", "--family", "para", "--a", "0", "--b", "0"}).code == kExitUsage);
  CHECK(run({"poly", "--family", "para", "--a", "1"}).code == kExitUsage);
  CHECK(run({"poly", "--family", "catalan", "--m", "1", "--n", "1"}).code == kExitUsage);
  CHECK(run({"poly", "--m", "2", "--n", "2", "--method", "guess"}).code == kExitUsage);
}

TEST_CASE("text and JSON decode to the same polynomial") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; m + n <= 7; ++n) {
      std::vector<std::string> base{"poly", "--m", std::to_string(m), "--n", std::to_string(n)};
      auto json = base;
      json.insert(json.end(), {"--format", "json"});
      const QTPolynomial from_text = poly_from_text(run(base).out);
      CHECK(from_text == poly_from_json(run(json).out));
      CHECK(from_text == nara_enum(m, n));
    }
  }
}

TEST_CASE("serialization of large coefficients") {
  QTPolynomial big;
  big.add_term(0, 0, BigInt("123456789012345678901234567890"));
  big.add_term(2, 1, -7);
  const PolynomialContext ctx{Family::Para, 3, 4, OneCounts{1, 2}};
  const std::string text = poly_to_text(big, ctx);
  CHECK(text == "# para a=3 b=4 r=1 s=2\n0 0 123456789012345678901234567890\n2 1 -7\n");
  CHECK(poly_from_text(text) == big);
  const std::string json = poly_to_json(big, ctx);
  CHECK(json == R"({"family":"para","a":3,"b":4,"r":1,"s":2,"terms":[[0,0,"123456789012345678901234567890"],[2,1,"-7"]]})");
  CHECK(poly_from_json(json) == big);
  CHECK(poly_to_latex(big) == "123456789012345678901234567890-7q^{2}t^{1}");
  CHECK(poly_to_latex(QTPolynomial()) == "0");
  CHECK_THROWS_AS(poly_from_text("1 x 3\n"), ValidationError);
}

TEST_CASE("digamma") {
  const Run fwd = run(with_word({"digamma"}, fixtures::kFigureWord));
  CHECK(fwd.code == 0);
  CHECK(fwd.out == std::string(fixtures::kDigammaImage) + "\n");
  CHECK(run({"digamma", "0b", "1"}).out == "0b 1\n");
  const Run inv = run(with_word({"digamma", "--direction", "inverse"}, fixtures::kDigammaImage));
  CHECK(inv.out == std::string(fixtures::kFigureWord) + "\n");
  CHECK(run({"digamma", "0b", "2"}).code == kExitUsage);
  CHECK(run({"digamma", "0b", "1", "--direction", "sideways"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run small = run({"verify", "--max-total", "2"});
  CHECK(small.code == 0);
  CHECK(small.out.find("PASS count m=1 n=1") != std::string::npos);
  const Run all = run({"verify", "--max-total", "6"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--checks", "count,bogus"}).code == kExitUsage);
  CHECK(run({"verify", "--max-total", "1"}).code == kExitUsage);
  const auto doc = nlohmann::json::parse(run({"verify", "--max-total", "3", "--checks", "dyck,count", "--format", "json"}).out);
  REQUIRE(doc.size() == 6);
  CHECK(doc[0]["check"] == "dyck");
  CHECK(doc[1]["check"] == "count");
  CHECK(doc[2]["m"] == 1);
  CHECK(doc[2]["n"] == 2);
  CHECK(doc[4]["m"] == 2);
}

TEST_CASE("verify output does not depend on the thread count") {
  const std::string sequential = run({"verify", "--max-total", "7"}).out;
  CHECK(run({"verify", "--max-total", "7"}, 4).out == sequential);
  CHECK(run({"verify", "--max-total", "7"}, 16).out == sequential);
  CHECK(threads_from_env(nullptr) == 0);
  CHECK(threads_from_env("") == 0);
  CHECK(threads_from_env("3") == 3);
  CHECK(threads_from_env("x") == 0);
}

TEST_CASE("verification API") {
  CHECK(verification_checks().size() == 8);
  CHECK_THROWS_AS(run_verification(6, {"nope"}), ValidationError);
  CHECK_THROWS_AS(run_verification(1, {"count"}), ValidationError);
  const CheckResult r = run_check("digamma", 3, 4);
  CHECK(r.passed);
  CHECK(r.detail.empty());
}

TEST_CASE("commands are deterministic") {
  for (int i = 0; i < 2; ++i) {
    CHECK(run({"enumerate", "--m", "3", "--n", "4"}).out == run({"enumerate", "--m", "3", "--n", "4"}).out);
    CHECK(run({"poly", "--family", "tilde-nara", "--m", "3", "--n", "4", "--format", "json"}).out ==
          run({"poly", "--family", "tilde-nara", "--m", "3", "--n", "4", "--format", "json"}).out);
  }
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}
