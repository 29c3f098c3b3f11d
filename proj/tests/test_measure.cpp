#include "doctest.h"
#include "pmahler/extension.hpp"
#include "pmahler/measure.hpp"
#include "pmahler/series.hpp"
#include "support.hpp"

using namespace pmahler;
using testing::poly;
using testing::q;

namespace {

PadicContext ctx5() { return PadicContext(5, 30, 10); }

PadicScalar num(long a, long b, const PadicContext& ctx) { return from_rational(a, b, ctx); }

}  // namespace

TEST_CASE("log series of a small g") {
  const auto ctx = ctx5();
  CHECK(truncated_log_series(PadicLaurent(1, PadicScalar::zero(ctx)), 4).is_zero());
  const auto g = poly(ctx, 1, {{{1}, -5}});
  const auto l = truncated_log_series(g, 4);
  // log(1 - 5t) = -sum 5^m t^m / m
  mpz_class five_m = 1;
  for (int m = 1; m <= 4; ++m) {
    five_m *= 5;
    CHECK(agreement(l.coefficient({m}), from_rational(-five_m, mpz_class(m), ctx)) >= 5);
  }
  for (const auto& [e, c] : l.terms()) CHECK(c.valuation() < 5);
  CHECK(gauss_valuation(l) >= gauss_valuation(g));
  CHECK_THROWS_AS(truncated_log_series(poly(ctx, 1, {{{1}, 1}}), 4), DomainError);
}

TEST_CASE("monomials have vanishing measures") {
  const auto ctx = ctx5();
  const auto t = poly(ctx, 2, {{{3, -1}, 1}});
  for (int k = 1; k <= 3; ++k) CHECK(higher_mahler(t, k).scalar().is_exact_zero());
  const auto z = zeta_mahler(t, num(7, 3, ctx));
  CHECK(agreement(z.scalar(), PadicScalar::one(ctx)) >= 30);
  CHECK(radius_bound(t).c == kInfinity);
}

TEST_CASE("measure examples") {
  const auto ctx = ctx5();
  const auto lin = poly(ctx, 1, {{{1}, 1}, {{0}, q(-6, 5)}});
  const auto m1 = higher_mahler(lin, 1);
  CHECK(residue_mod(m1.scalar(), 4) == 555);
  CHECK(agreement(m1.scalar(), padic_log(num(6, 1, ctx))) >= 30);
  CHECK(m1.certified_precision == 30);

  const auto f = testing::quadratic(ctx, q(1, 5), 5);
  const auto m2 = higher_mahler(f, 2);
  CHECK(residue_mod(m2.scalar(), 4) == 50);
  CHECK(agreement(m2.scalar(), num(2, 1, ctx) * multipolylog(Index{2}, num(25, 1, ctx), 30)) >= 30);
  CHECK(agreement(higher_mahler(f, 0).scalar(), PadicScalar::one(ctx)) == kInfinity);
  CHECK_THROWS_AS(higher_mahler(poly(ctx, 1, {{{1}, 1}, {{0}, 1}}), 1), NonvanishingError);
}

TEST_CASE("zeta examples") {
  const auto ctx = ctx5();
  const auto f = testing::quadratic(ctx, q(1, 5), 5);
  CHECK(agreement(zeta_mahler(f, PadicScalar::zero(ctx)).scalar(), PadicScalar::one(ctx)) == kInfinity);
  const auto z1 = zeta_mahler(f, PadicScalar::one(ctx));
  CHECK(agreement(z1.scalar(), num(26, 1, ctx)) >= 30);
  CHECK_THROWS_AS(zeta_mahler(f, num(1, 5, ctx)), DomainError);

  const auto jet = zeta_mahler_jet(f, 4).jet();
  CHECK(agreement(jet.coefficient(0), PadicScalar::one(ctx)) >= 30);
  CHECK(agreement(jet.coefficient(1), higher_mahler(f, 1).scalar()) >= 30);
  CHECK(residue_mod(jet.coefficient(2), 4) == 25);
  mpz_class fact = 1;
  for (int k = 1; k <= 4; ++k) {
    fact *= k;
    CHECK(agreement(jet.coefficient(k) * PadicScalar::from_integer(fact, ctx), higher_mahler(f, k).scalar()) >= 28);
  }
}

TEST_CASE("jet evaluation matches scalar zeta") {
  const auto ctx = ctx5();
  const auto f = testing::quadratic(ctx, q(6, 5), 25);
  const auto jet = zeta_mahler_jet(f, 10).jet();
  for (const auto& s : {num(5, 1, ctx), num(25, 1, ctx), num(-10, 1, ctx)}) {
    // |m_k/k!| <= p^-(k - v(k!)) and s^11 carries 11 more digits.
    CHECK(agreement(jet.evaluate(s), zeta_mahler(f, s).scalar()) >= 11 + 11 - 2);
  }
}

TEST_CASE("two-variable measures") {
  const auto ctx = ctx5();
  const auto f = testing::torus_quartic(ctx, q(1, 5));
  const auto m1 = higher_mahler(f, 1).scalar();
  const auto jet = zeta_mahler_jet(f, 2).jet();
  CHECK(agreement(jet.coefficient(1), m1) >= 28);
  for (int k = 1; k <= 2; ++k) {
    const auto base = higher_mahler(f, k).scalar();
    for (const IntMatrix& s : {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1, 1}, {0, 1}}}) {
      CHECK(agreement(higher_mahler(substitute_monomials(f, s), k).scalar(), base) >= 28);
    }
  }
}

TEST_CASE("finite averages") {
  const auto ctx = ctx5();
  const auto f = testing::quadratic(ctx, q(1, 5), 5);
  const auto one_point = shnirelman_average(f, 1, 1, 1);
  CHECK(agreement(one_point.scalar(), padic_log(num(-16, 5, ctx))) >= 29);

  for (int k = 1; k <= 2; ++k) {
    const auto engine = higher_mahler(f, k).scalar();
    const auto a4 = shnirelman_average(f, k, 1, 4);
    const auto a24 = shnirelman_average(f, k, 2, 24);
    const long g4 = agreement(a4.scalar(), engine), g24 = agreement(a24.scalar(), engine);
    CHECK(g4 >= a4.diagnostics.at("predicted_agreement"));
    CHECK(g24 >= a24.diagnostics.at("predicted_agreement"));
    CHECK(g24 > g4);
    for (long n : {8L, 12L}) {
      const auto a = shnirelman_average(f, k, 2, n);
      CHECK(agreement(a.scalar(), engine) >= a.diagnostics.at("predicted_agreement"));
    }
  }
  CHECK_THROWS_AS(shnirelman_average(f, 1, 1, 3), DomainError);
}

TEST_CASE("log of sampled roots vanishes") {
  const auto ctx = ctx5();
  const auto field = make_unramified(ctx, 2);
  for (const auto& z : roots_of_unity(field, 24)) {
    const auto l = ext_log(z);
    for (int i = 0; i < field.degree(); ++i) CHECK(l.coefficient(i).is_zero());
  }
}

TEST_CASE("radius bounds") {
  const auto ctx = ctx5();
  const auto r = radius_bound(poly(ctx, 1, {{{0}, 1}, {{1}, 5}}));
  CHECK(r.c == 1);
  CHECK(r.log_radius == mpq_class(3, 4));
  CHECK(r.closed_disc);

  for (const auto& f : {testing::quadratic(ctx, q(1, 5), 5), testing::quadratic(ctx, q(6, 5), 25),
                        poly(ctx, 1, {{{1}, 1}, {{0}, q(-6, 5)}}), poly(ctx, 1, {{{0}, 1}, {{1}, 5}})}) {
    for (int k = 1; k <= 6; ++k) {
      const auto m = higher_mahler(f, k);
      const long v = m.scalar().is_zero() ? m.certified_precision : m.scalar().valuation();
      CHECK(v >= std::min<long>(k, m.certified_precision));
    }
  }
}
