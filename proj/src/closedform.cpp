#include "pmahler/closedform.hpp"

#include <array>

#include "pmahler/hoffman.hpp"
#include "pmahler/ring.hpp"
#include "pmahler/series.hpp"

namespace pmahler {

namespace {

void check_roots(const PadicScalar& alpha, const PadicScalar& beta) {
  if (beta.is_zero() || beta.valuation() < 1) throw DomainError("need 0 < |beta| < 1 (v(beta) >= 1)");
  if (alpha.is_zero() || alpha.valuation() > -1) throw DomainError("need |alpha| > 1 (v(alpha) <= -1)");
}

void check_c(const PadicScalar& c) {
  if (c.is_zero() || c.valuation() > -1) throw DomainError("need |c| > 1 (v(c) <= -1)");
}

void check_s(const PadicScalar& s) {
  if (!s.is_exact_zero() && s.valuation() < 0) throw DomainError("|s| > 1: outside closed unit disc");
}

PadicScalar finish(const PadicScalar& x) {
  return x.is_exact() ? x : with_absolute_precision(x, x.context().target_precision());
}

SJet finish(const SJet& x) { return cap_precision(x, x.context().target_precision()); }

PadicScalar angle_factor(const PadicScalar& a, const PadicScalar& s) { return angle_power(a, s); }
SJet angle_factor(const PadicScalar& a, const SJet& s) { return jet_exp(s * padic_log(a)); }

template <class R>
R main2_impl(const PadicScalar& alpha, const PadicScalar& beta, const R& s) {
  check_roots(alpha, beta);
  const PadicContext& ctx = alpha.context();
  const std::array<R, 2> upper{-s, -s};
  const std::array<PadicScalar, 1> lower{PadicScalar::one(ctx)};
  const R f21 = hypergeometric<R>(upper, lower, beta / alpha, ctx.target_precision());
  return finish(angle_factor(alpha, s) * f21);
}

template <class R>
R main3_impl(const PadicScalar& c, const R& s) {
  check_c(c);
  const PadicContext& ctx = c.context();
  using T = RingTraits<R>;
  const PadicScalar half = from_rational(1, 2, ctx);
  const std::array<R, 3> upper{T::embed(s, half), -s * half, (T::embed(s, PadicScalar::one(ctx)) - s) * half};
  const std::array<PadicScalar, 2> lower{PadicScalar::one(ctx), PadicScalar::one(ctx)};
  const PadicScalar z = PadicScalar::from_integer(16, ctx) / (c * c);
  const R f32 = hypergeometric<R>(upper, lower, z, ctx.target_precision());
  return finish(angle_factor(c, s) * f32);
}

}  // namespace

PadicScalar main1_rhs(const PadicScalar& alpha, const PadicScalar& beta, int k) {
  check_roots(alpha, beta);
  if (k < 0) throw DomainError("k must be nonnegative");
  const PadicContext& ctx = alpha.context();
  const int target = ctx.target_precision();
  const PadicScalar z = beta / alpha;
  const PadicScalar log_a = padic_log(alpha);
  std::vector<PadicScalar> log_powers{PadicScalar::one(ctx)};
  for (int i = 1; i <= k; ++i) log_powers.push_back(log_powers.back() * log_a);

  PadicScalar sum = log_powers[static_cast<std::size_t>(k)];
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; i + j <= k; ++j) {
      // k!/(k-i-j)! as an exact integer
      mpz_class falling = 1;
      for (int x = k - i - j + 1; x <= k; ++x) falling *= x;
      if ((i + j) % 2 == 1) falling = -falling;
      const PadicScalar li = multipolylog(main1_word(i, j), z, target);
      sum += PadicScalar::from_integer(falling, ctx) * log_powers[static_cast<std::size_t>(k - i - j)] * li;
    }
  }
  return finish(sum);
}

PadicScalar main2_rhs(const PadicScalar& alpha, const PadicScalar& beta, const PadicScalar& s) {
  check_s(s);
  return main2_impl(alpha, beta, s);
}

SJet main2_rhs(const PadicScalar& alpha, const PadicScalar& beta, const SJet& s) { return main2_impl(alpha, beta, s); }

PadicScalar main3_rhs(const PadicScalar& c, const PadicScalar& s) {
  check_s(s);
  return main3_impl(c, s);
}

SJet main3_rhs(const PadicScalar& c, const SJet& s) { return main3_impl(c, s); }

PadicScalar rv_rhs(const PadicScalar& c) {
  check_c(c);
  const PadicContext& ctx = c.context();
  const PadicScalar three_halves = from_rational(3, 2, ctx);
  const PadicScalar one = PadicScalar::one(ctx);
  const PadicScalar two = PadicScalar::from_integer(2, ctx);
  const std::array<PadicScalar, 4> upper{three_halves, three_halves, one, one};
  const std::array<PadicScalar, 3> lower{two, two, two};
  const PadicScalar c2 = c * c;
  const PadicScalar f43 = hypergeometric<PadicScalar>(upper, lower, PadicScalar::from_integer(16, ctx) / c2,
                                                      ctx.target_precision());
  return finish(padic_log(c) - two / c2 * f43);
}

}  // namespace pmahler
