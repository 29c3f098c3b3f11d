#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "pmahler/cli.hpp"
#include "pmahler/hoffman.hpp"
#include "pmahler/io.hpp"
#include "pmahler/measure.hpp"

using namespace pmahler;

namespace {

const char* kQuadratic =
    R"({"vars":1,"terms":[{"coeff":"1","exp":[2]},{"coeff":"-26/5","exp":[1]},{"coeff":"1","exp":[0]}]})";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("p-adic literals") {
  const PadicContext ctx(5, 30, 10);
  CHECK(agreement(parse_padic_literal("-26/5", ctx), from_rational(-26, 5, ctx)) == kInfinity);
  CHECK(agreement(parse_padic_literal("5^3", ctx), from_rational(125, 1, ctx)) == kInfinity);
  CHECK(agreement(parse_padic_literal("p^-2*3", ctx), from_rational(3, 25, ctx)) == kInfinity);
  CHECK(agreement(parse_padic_literal("2*5^2", ctx), from_rational(50, 1, ctx)) == kInfinity);
  const auto partial = parse_padic_literal("2 + 5 + O(5^3)", ctx);
  CHECK(partial.absolute_precision() == 3);
  CHECK(residue_mod(partial, 3) == 7);
  for (long n : {7L, -123L, 625L, 0L}) {
    const auto x = from_rational(n, 1, ctx);
    CHECK(agreement(parse_padic_literal(x.to_string(), ctx), x) >= 30);
  }
  const auto third = with_absolute_precision(from_rational(1, 3, ctx), 12);
  CHECK(agreement(parse_padic_literal(third.to_string(), ctx), third) >= 12);
  CHECK_THROWS_AS(parse_padic_literal("1/0", ctx), ParseError);
  CHECK_THROWS_AS(parse_padic_literal("abc", ctx), ParseError);
}

TEST_CASE("polynomial JSON") {
  const PadicContext ctx(5, 30, 10);
  const auto f = parse_polynomial(kQuadratic, ctx);
  CHECK(f.size() == 3);
  const auto g = parse_polynomial(polynomial_to_json(f), ctx);
  CHECK(g.size() == 3);
  CHECK(agreement(g.coefficient({1}), from_rational(-26, 5, ctx)) == kInfinity);
  CHECK_THROWS_AS(parse_polynomial("{", ctx), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"vars":1,"terms":[{"coeff":"1","exp":[1,2]}]})", ctx), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"vars":1,"terms":[{"coeff":"x","exp":[1]}]})", ctx), ParseError);
  CHECK(parse_index("(1,2)") == Index{1, 2});
  CHECK(parse_index("3") == Index{3});
  CHECK_THROWS_AS(parse_index("(0,2)"), ParseError);
}

TEST_CASE("measure command") {
  const auto r = run({"measure", "--p", "5", "--prec", "30", "-k", "2", "--poly", kQuadratic});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("= 2*5^2 + ") != std::string::npos);
  CHECK(r.out.find("precision: 30") != std::string::npos);

  const auto zero = run({"measure", "-k", "0", "--poly", kQuadratic});
  CHECK(zero.code == kExitOk);
  CHECK(zero.out.find("= 1\n") != std::string::npos);

  const auto bad = run({"measure", "-k", "1", "--poly", R"({"vars":1,"terms":[{"coeff":"1","exp":[1]},{"coeff":"1","exp":[0]}]})"});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("vanishes on the p-adic torus") != std::string::npos);

  CHECK(run({"measure", "-k", "1", "--poly", "{"}).code == kExitUsage);
  CHECK(run({"measure", "--poly", kQuadratic}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("json output") {
  const auto r = run({"measure", "-k", "2", "--format", "json", "--poly", kQuadratic});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["precision"] == 30);
  CHECK(j["method"] == "constant_term_engine");
  CHECK(j["value"].get<std::string>().rfind("2*5^2", 0) == 0);
  CHECK(j["diagnostics"].contains("log_terms"));
}

TEST_CASE("zeta command") {
  const auto r = run({"zeta", "--s", "1", "--poly", kQuadratic});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("= 1 + 5^2 + O(5^30)") != std::string::npos);
  const auto far = run({"zeta", "--s", "1/5", "--poly", kQuadratic});
  CHECK(far.code == kExitDomain);
  CHECK(far.err.find("outside closed unit disc") != std::string::npos);
  CHECK(run({"zeta", "--jet", "3", "--poly", kQuadratic}).code == kExitOk);
}

TEST_CASE("verify command") {
  const auto r = run({"verify", "thm1", "--p", "5", "--prec", "40", "--alpha", "1/5", "--beta", "5", "-k", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "rv", "--p", "5", "--c", "1/5"}).code == kExitOk);
  CHECK(run({"verify", "hoffman", "--max-weight", "4"}).code == kExitOk);
  CHECK(run({"verify", "lemma35", "--t", "5", "-k", "3", "--l", "2"}).code == kExitOk);
  CHECK(run({"verify", "nope"}).code == kExitUsage);
}

TEST_CASE("average command") {
  const auto r = run({"average", "--p", "5", "--N", "4", "-k", "2", "--poly", kQuadratic});
  CHECK(r.code == kExitOk);
  CHECK(run({"average", "--p", "5", "--N", "3", "-k", "2", "--poly", kQuadratic}).code == kExitDomain);
  CHECK(run({"average", "--p", "5", "--N", "24", "--tower-degree", "2", "-k", "1", "--poly", kQuadratic}).code ==
        kExitOk);
}

TEST_CASE("radius, polylog and hyper commands") {
  const auto r = run({"radius", "--poly", R"({"vars":1,"terms":[{"coeff":"1","exp":[0]},{"coeff":"5","exp":[1]}]})"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("C = 1") != std::string::npos);
  CHECK(r.out.find("3/4") != std::string::npos);
  const auto li = run({"polylog", "--index", "(1)", "--t", "5", "--prec", "4"});
  CHECK(li.code == kExitOk);
  CHECK(li.out.find("O(5^4)") != std::string::npos);
  CHECK(run({"polylog", "--index", "(1)", "--t", "1"}).code == kExitDomain);
  CHECK(run({"hyper", "--upper", "-1,-1", "--lower", "1", "--z", "5"}).code == kExitOk);
}
