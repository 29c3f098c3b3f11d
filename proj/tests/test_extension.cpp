#include <set>

#include "doctest.h"
#include "pmahler/extension.hpp"

using namespace pmahler;

TEST_CASE("defining polynomial search") {
  const PadicContext ctx(5, 20, 6);
  auto q5 = make_unramified(ctx, 1);
  CHECK(q5.degree() == 1);
  CHECK(q5.residue_field_size() == 5);

  auto q25 = make_unramified(ctx, 2);
  const auto& c = q25.defining_coefficients();
  REQUIRE(c.size() == 2);
  // x^2 + c1 x + c0 has no root mod 5
  for (long x = 0; x < 5; ++x) CHECK((x * x + c[1] * x + c[0]) % 5 != 0);
  CHECK(c == std::vector<long>{2, 0});

  CHECK(!is_irreducible_mod_p({0, 1, 0}, 2));  // x^3 + x
  CHECK(is_irreducible_mod_p({1, 1}, 2));
  CHECK(is_irreducible_mod_p({1, 0, 0, 1}, 2));  // x^4 + x^3 + 1
  CHECK(!is_irreducible_mod_p({1, 0, 1, 0}, 2));  // (x^2 + x + 1)^2
  CHECK_THROWS_AS(make_unramified(ctx, 0), DomainError);
}

TEST_CASE("roots of unity in Q_5") {
  const PadicContext ctx(5, 20, 6);
  auto q5 = make_unramified(ctx, 1);
  auto one = roots_of_unity(q5, 1);
  REQUIRE(one.size() == 1);
  CHECK(agreement(one[0].coefficient(0), PadicScalar::one(ctx)) >= 26);

  auto mu4 = roots_of_unity(q5, 4);
  std::set<mpz_class> residues;
  for (const auto& z : mu4) residues.insert(residue_mod(z.coefficient(0), 4));
  CHECK(residues == std::set<mpz_class>{1, 182, 443, 624});

  CHECK_THROWS_AS(roots_of_unity(q5, 3), DomainError);
  CHECK_THROWS_AS(roots_of_unity(q5, 24), DomainError);
  CHECK_THROWS_AS(roots_of_unity(q5, 5), DomainError);
}

TEST_CASE("roots of unity in Q_25") {
  const PadicContext ctx(5, 20, 6);
  auto q25 = make_unramified(ctx, 2);
  const ExtScalar one = ExtScalar::embed(q25, PadicScalar::one(ctx));
  for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 24L}) {
    auto roots = roots_of_unity(q25, n);
    REQUIRE(roots.size() == static_cast<std::size_t>(n));
    ExtScalar product = one;
    std::set<std::vector<mpz_class>> residues;
    for (const auto& z : roots) {
      CHECK(agreement(pow(z, n), one) >= 26);
      product *= z;
      std::vector<mpz_class> r;
      for (const auto& c : z.coefficients()) r.push_back(residue_mod(c, 1));
      residues.insert(r);
      auto l = ext_log(z);
      CHECK(l.valuation() >= 21);
    }
    CHECK(residues.size() == static_cast<std::size_t>(n));
    const ExtScalar sign = ExtScalar::embed(q25, PadicScalar::from_integer(n % 2 == 1 ? 1 : -1, ctx));
    CHECK(agreement(product, sign) >= 26);

    // orthogonality
    for (long v = -3 * n; v <= 3 * n; ++v) {
      ExtScalar sum = ExtScalar::embed(q25, PadicScalar::zero(ctx));
      for (const auto& z : roots) sum += pow(z, v);
      const long expected = (v % n == 0) ? n : 0;
      CHECK(agreement(sum, ExtScalar::embed(q25, PadicScalar::from_integer(expected, ctx))) >= 26);
    }
  }
  CHECK_THROWS_AS(roots_of_unity(q25, 7), DomainError);
}

TEST_CASE("extension inverse and log") {
  const PadicContext ctx(5, 20, 6);
  auto q25 = make_unramified(ctx, 2);
  ExtScalar x(q25, {from_rational(3, 7, ctx), PadicScalar::from_integer(10, ctx)});
  ExtScalar one = ExtScalar::embed(q25, PadicScalar::one(ctx));
  CHECK(agreement(x * x.inverse(), one) >= 26);
  ExtScalar y(q25, {from_rational(1, 5, ctx), PadicScalar::from_integer(2, ctx)});
  CHECK(y.valuation() == -1);
  CHECK(agreement(y * y.inverse(), one) >= 24);
  CHECK(agreement(ext_log(x * y), ext_log(x) + ext_log(y)) >= 20);

  // on Q_5 elements the extension log matches padic_log
  auto a = from_rational(-26, 5, ctx);
  CHECK(agreement(ext_log(ExtScalar::embed(q25, a)).coefficient(0), padic_log(a)) >= 20);
}

TEST_CASE("eval_laurent") {
  const PadicContext ctx(5, 4, 4);
  auto q5 = make_unramified(ctx, 1);
  PadicLaurent f(1, PadicScalar::zero(ctx));
  f.add_term({1}, PadicScalar::one(ctx));
  f.add_term({-1}, PadicScalar::one(ctx));
  auto minus_one = ExtScalar::embed(q5, PadicScalar::from_integer(-1, ctx));
  CHECK(agreement(eval_laurent(f, {minus_one}).coefficient(0), PadicScalar::from_integer(-2, ctx)) >= 8);

  PadicLaurent quad(1, PadicScalar::zero(ctx));
  quad.add_term({2}, PadicScalar::one(ctx));
  quad.add_term({1}, from_rational(-26, 5, ctx));
  quad.add_term({0}, PadicScalar::one(ctx));
  auto mu4 = roots_of_unity(q5, 4);
  for (const auto& z : mu4) {
    if (residue_mod(z.coefficient(0), 1) != 2) continue;
    const auto& zeta = z.coefficient(0);
    auto expected = zeta * zeta + from_rational(-26, 5, ctx) * zeta + PadicScalar::one(ctx);
    CHECK(agreement(eval_laurent(quad, {z}).coefficient(0), expected) >= 4);
  }
  auto nonunit = ExtScalar::embed(q5, PadicScalar::from_integer(5, ctx));
  CHECK_THROWS_AS(eval_laurent(f, {nonunit}), DomainError);
}
