#include "pmahler/measure.hpp"

#include <algorithm>

#include "pmahler/extension.hpp"
#include "pmahler/ring.hpp"
#include "pmahler/series.hpp"

namespace pmahler {

namespace {

const PadicContext& context_of(const PadicLaurent& f) { return f.zero().context(); }

MeasureResult finish(PadicScalar value, Method method, std::map<std::string, std::int64_t> diagnostics) {
  const long target = value.context().target_precision();
  MeasureResult r;
  r.certified_precision = std::min(target, value.absolute_precision());
  if (!value.is_exact()) value = with_absolute_precision(value, r.certified_precision);
  r.value = std::move(value);
  r.method = method;
  r.diagnostics = std::move(diagnostics);
  return r;
}

MeasureResult finish(const SJet& value, Method method, std::map<std::string, std::int64_t> diagnostics) {
  const long target = value.context().target_precision();
  MeasureResult r;
  r.certified_precision = std::min(target, value.absolute_precision());
  r.value = value.absolute_precision() < kInfinity ? cap_precision(value, r.certified_precision) : value;
  r.method = method;
  r.diagnostics = std::move(diagnostics);
  return r;
}

PadicScalar angle_factor(const PadicScalar& a, const PadicScalar& s) { return angle_power(a, s); }
SJet angle_factor(const PadicScalar& a, const SJet& s) { return jet_exp(s * padic_log(a)); }

// Z_p(s, f) = <a>^s * sum_m binom(s, m) [g^m]_0 for |s| <= 1.
template <class R>
MeasureResult zeta_engine(const PadicLaurent& f, const R& s) {
  const PadicContext& ctx = context_of(f);
  const long p = ctx.prime();
  const long threshold = ctx.target_precision() + 1;
  const UnitDecomposition d = decompose_unit(f);
  const long vg = gauss_valuation(d.g);

  // v(binom(s, m) [g^m]_0) >= m v_g - (m-1)/(p-1) >= threshold for m > M.
  long m_cut = 0;
  if (vg < kInfinity) {
    const long need = threshold * (p - 1) - 1;
    const long slope = vg * (p - 1) - 1;
    m_cut = std::max(0L, (need + slope - 1) / slope - 1);
  }
  const long keep = threshold + (m_cut > 0 ? (m_cut - 1) / (p - 1) : 0) + 1;

  std::vector<PadicScalar> constant_terms{PadicScalar::one(ctx)};
  PadicLaurent power = PadicLaurent::constant(f.n_vars(), PadicScalar::one(ctx), f.zero());
  std::size_t max_support = 0;
  for (long m = 1; m <= m_cut; ++m) {
    power = truncated_mul(power, d.g, keep);
    max_support = std::max(max_support, power.size());
    constant_terms.push_back(power.constant_term());
  }

  const std::vector<R> binoms = binomial_coefficients(s, m_cut);
  R sum = binoms[0] * constant_terms[0];
  for (long m = 1; m <= m_cut; ++m) {
    sum = sum + binoms[static_cast<std::size_t>(m)] * constant_terms[static_cast<std::size_t>(m)];
  }
  const R value = angle_factor(d.a, s) * sum;
  return finish(value, Method::constant_term_engine,
                {{"binomial_terms", m_cut}, {"max_power_support", static_cast<std::int64_t>(max_support)}});
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::constant_term_engine:
      return "constant_term_engine";
    case Method::closed_form:
      return "closed_form";
    case Method::finite_average:
      return "finite_average";
  }
  return "unknown";
}

PadicLaurent truncated_log_series(const PadicLaurent& g, int target, long* terms) {
  const long vg = gauss_valuation(g);
  if (terms) *terms = 0;
  if (vg == kInfinity) return PadicLaurent(g.n_vars(), g.zero());
  if (vg <= 0) throw DomainError("log series needs gauss_valuation(g) >= 1");
  const auto constant = g.terms().find(Exponent(static_cast<std::size_t>(g.n_vars()), 0));
  if (constant != g.terms().end()) throw DomainError("log series expects g without constant term");

  const PadicContext& ctx = context_of(g);
  const long threshold = target + 1;
  const long m_cut = polylog_cutoff(vg, 1, threshold, ctx.prime());
  // Division by m costs at most floor(log_p M) digits.
  const long keep = threshold + floor_log(std::max(m_cut, 1L), ctx.prime());

  PadicLaurent sum(g.n_vars(), g.zero());
  PadicLaurent power = truncate_valuation(g, keep);
  for (long m = 1; m <= m_cut; ++m) {
    if (m > 1) power = truncated_mul(power, g, keep);
    sum = sum + power * from_rational(m % 2 == 1 ? 1 : -1, m, ctx);
  }
  if (terms) *terms = m_cut;
  return truncate_valuation(sum, threshold);
}

MeasureResult higher_mahler(const PadicLaurent& f, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  const PadicContext& ctx = context_of(f);
  const UnitDecomposition d = decompose_unit(f);
  const PadicScalar one = PadicScalar::one(ctx);
  if (k == 0) return finish(one, Method::constant_term_engine, {});

  const int target = ctx.target_precision();
  const long threshold = target + 1;
  long log_terms = 0;
  const PadicLaurent log_series = truncated_log_series(d.g, target, &log_terms);
  const PadicScalar log_a = padic_log(d.a);

  // [L^j]_0 = [L^ceil(j/2) L^floor(j/2)]_0
  std::vector<PadicLaurent> powers{PadicLaurent::constant(f.n_vars(), one, f.zero()), log_series};
  for (int i = 2; i <= (k + 1) / 2; ++i) powers.push_back(truncated_mul(powers.back(), log_series, threshold));
  std::vector<PadicScalar> b{one};
  for (int j = 1; j <= k; ++j) {
    b.push_back(constant_term_of_product(powers[static_cast<std::size_t>((j + 1) / 2)],
                                         powers[static_cast<std::size_t>(j / 2)]));
  }

  // m_{p,k} = sum_i binom(k, i) log_p^i(a) b_{k-i}
  PadicScalar sum = PadicScalar::zero(ctx);
  PadicScalar log_power = one;
  for (int i = 0; i <= k; ++i) {
    sum += PadicScalar::from_integer(binomial(k, i), ctx) * log_power * b[static_cast<std::size_t>(k - i)];
    log_power *= log_a;
  }
  return finish(sum, Method::constant_term_engine,
                {{"log_terms", log_terms},
                 {"log_support", static_cast<std::int64_t>(log_series.size())},
                 {"max_power_support", static_cast<std::int64_t>(powers.back().size())}});
}

MeasureResult zeta_mahler(const PadicLaurent& f, const PadicScalar& s) {
  const PadicContext& ctx = context_of(f);
  if (!s.is_exact_zero() && s.valuation() < 0) throw DomainError("|s| > 1: outside closed unit disc");
  if (s.is_exact_zero()) {
    decompose_unit(f);
    return finish(PadicScalar::one(ctx), Method::constant_term_engine, {});
  }
  return zeta_engine(f, s);
}

MeasureResult zeta_mahler_jet(const PadicLaurent& f, int order) {
  if (order < 0) throw DomainError("jet order must be nonnegative");
  return zeta_engine(f, SJet::generator(context_of(f), order));
}

long predicted_average_agreement(const PadicLaurent& f, int k, long n) {
  const PadicContext& ctx = context_of(f);
  const long target = ctx.target_precision();
  if (k == 0) return target;
  const UnitDecomposition d = decompose_unit(f);
  const long vg = gauss_valuation(d.g);
  const long deg = d.g.max_abs_exponent();
  if (vg == kInfinity || deg == 0) return target;
  const PadicScalar log_a = padic_log(d.a);
  const long vlog = log_a.is_exact_zero() ? kInfinity : log_a.valuation();
  const long p = ctx.prime();

  // Only monomials t^e with N | e, e != 0 separate the average from the constant
  // term; in L^j they come from g^(m_1 + ... + m_j) with sum m_i >= N / deg.
  const long m_min = (n + deg - 1) / deg;
  const long s_max = std::max(m_min, static_cast<long>(k)) + target + 64;
  auto h = [&](long m) { return m * vg - floor_log(m, p); };
  std::vector<long> best(static_cast<std::size_t>(s_max + 1), kInfinity);
  for (long s = 1; s <= s_max; ++s) best[static_cast<std::size_t>(s)] = h(s);
  long predicted = kInfinity;
  for (int j = 1; j <= k; ++j) {
    if (j > 1) {
      std::vector<long> next(best.size(), kInfinity);
      for (long s = j; s <= s_max; ++s) {
        for (long m = 1; m <= s - (j - 1); ++m) {
          const long prev = best[static_cast<std::size_t>(s - m)];
          if (prev < kInfinity) next[static_cast<std::size_t>(s)] = std::min(next[static_cast<std::size_t>(s)], prev + h(m));
        }
      }
      best = std::move(next);
    }
    if (j < k && vlog == kInfinity) continue;
    long e_j = kInfinity;
    for (long s = std::max<long>(m_min, j); s <= s_max; ++s) e_j = std::min(e_j, best[static_cast<std::size_t>(s)]);
    const long bound = (j < k ? (k - j) * vlog : 0) + e_j;
    predicted = std::min(predicted, bound);
  }
  return std::min(predicted, target);
}

MeasureResult shnirelman_average(const PadicLaurent& f, int k, int tower_degree, long n) {
  if (k < 0) throw DomainError("k must be nonnegative");
  const PadicContext& ctx = context_of(f);
  decompose_unit(f);
  const UnramifiedField field = make_unramified(ctx, tower_degree);
  const std::vector<ExtScalar> roots = roots_of_unity(field, n);
  const int vars = f.n_vars();

  ExtScalar acc = ExtScalar::embed(field, PadicScalar::zero(ctx));
  std::vector<std::size_t> digits(static_cast<std::size_t>(vars), 0);
  std::vector<ExtScalar> point(static_cast<std::size_t>(vars), roots.front());
  long points = 0;
  while (true) {
    for (std::size_t i = 0; i < digits.size(); ++i) point[i] = roots[digits[i]];
    const ExtScalar value = eval_laurent(f, point);
    acc += pow(ext_log(value), k);
    ++points;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == roots.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  const ExtScalar mean = acc / PadicScalar::from_integer(points, ctx);

  long off_axis = kInfinity;
  for (int i = 1; i < field.degree(); ++i) off_axis = std::min(off_axis, mean.coefficient(i).valuation());
  PadicScalar value = mean.coefficient(0);
  if (off_axis < value.absolute_precision()) value = with_absolute_precision(value, off_axis);
  return finish(value, Method::finite_average,
                {{"N", n},
                 {"points", points},
                 {"tower_degree", tower_degree},
                 {"predicted_agreement", predicted_average_agreement(f, k, n)}});
}

RadiusBound radius_bound(const PadicLaurent& f) {
  const PadicContext& ctx = context_of(f);
  const long p = ctx.prime();
  const UnitDecomposition d = decompose_unit(f);
  const PadicScalar log_a = padic_log(d.a);
  long c = log_a.is_exact_zero() ? kInfinity : log_a.valuation();
  const long vg = gauss_valuation(d.g);
  if (vg < kInfinity) {
    // m v_g - floor(log_p m) is minimal at m = 1 whenever v_g >= 1; scan a few p-blocks anyway.
    for (long m = 1; m <= p * p * p; ++m) c = std::min(c, m * vg - floor_log(m, p));
  }
  RadiusBound r;
  r.c = c;
  if (c < kInfinity) {
    r.log_radius = mpq_class(c) - mpq_class(1, p - 1);
    r.log_radius.canonicalize();
    r.closed_disc = c * (p - 1) > 1;
  } else {
    r.closed_disc = true;
  }
  return r;
}

}  // namespace pmahler
