#include "pmahler/series.hpp"

namespace pmahler {

namespace {

long index_weight(const Index& idx) {
  long w = 0;
  for (int k : idx) w += k;
  return w;
}

void check_polylog_argument(const PadicScalar& t) {
  if (!t.is_exact_zero() && t.valuation() <= 0) throw DomainError("outside polylog disc (need v(t) >= 1)");
}

// Chain sums P_j(m) = sum_{m_1<...<m_j<m} 1/(m_1^k_1 ... m_j^k_j), advanced one m at a time.
template <class Num>
class ChainSums {
 public:
  ChainSums(const Index& exps, Num one, Num zero) : exps_(exps), p_(exps.size() + 1, zero) { p_[0] = one; }

  // P_len(m) for the current m.
  const Num& top() const { return p_.back(); }

  // m -> m + 1 given the inverse powers of m.
  template <class InvPow>
  void advance(InvPow inv_pow) {
    for (std::size_t j = exps_.size(); j >= 1; --j) p_[j] = p_[j] + p_[j - 1] * inv_pow(exps_[j - 1]);
  }

 private:
  Index exps_;
  std::vector<Num> p_;
};

}  // namespace

PadicScalar multipolylog(const Index& idx, const PadicScalar& t, int target, SeriesStats* stats) {
  if (idx.empty()) return PadicScalar::one(t.context());
  check_polylog_argument(t);
  if (t.is_exact_zero()) return t;
  const PadicContext& ctx = t.context();
  const long threshold = target + 1;
  const long cutoff = polylog_cutoff(t.valuation(), index_weight(idx), threshold, ctx.prime());

  const Index head(idx.begin(), idx.end() - 1);
  ChainSums<PadicScalar> chains(head, PadicScalar::one(ctx), PadicScalar::zero(ctx));
  PadicScalar sum = PadicScalar::zero(ctx);
  PadicScalar tp = PadicScalar::one(ctx);
  for (long m = 1; m <= cutoff; ++m) {
    const PadicScalar pm = PadicScalar::from_integer(m, ctx);
    auto inv_pow = [&](int k) { return pow(pm, -k); };
    tp *= t;
    sum += chains.top() * tp * inv_pow(idx.back());
    chains.advance(inv_pow);
  }
  if (stats) stats->terms = cutoff;
  return with_absolute_precision(sum, threshold);
}

PadicScalar multipolylog(const WordPoly& w, const PadicScalar& t, int target, SeriesStats* stats) {
  PadicScalar sum = PadicScalar::zero(t.context());
  SeriesStats worst;
  for (const auto& [idx, c] : w.index_terms()) {
    SeriesStats s;
    sum += from_rational(c, t.context()) * multipolylog(idx, t, target, &s);
    worst.terms = std::max(worst.terms, s.terms);
  }
  if (stats) *stats = worst;
  return sum;
}

std::vector<mpq_class> multipolylog_coefficients(const Index& idx, int degree) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(degree + 1), 0);
  if (idx.empty()) {
    coeffs[0] = 1;
    return coeffs;
  }
  const Index head(idx.begin(), idx.end() - 1);
  ChainSums<mpq_class> chains(head, 1, 0);
  for (long m = 1; m <= degree; ++m) {
    auto inv_pow = [m](int k) {
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      return mpq_class(1, d);
    };
    coeffs[static_cast<std::size_t>(m)] = chains.top() * inv_pow(idx.back());
    chains.advance(inv_pow);
  }
  return coeffs;
}

std::vector<mpq_class> multipolylog_coefficients(const WordPoly& w, int degree) {
  std::vector<mpq_class> sum(static_cast<std::size_t>(degree + 1), 0);
  for (const auto& [idx, c] : w.index_terms()) {
    const auto part = multipolylog_coefficients(idx, degree);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c * part[i];
  }
  return sum;
}

std::vector<mpq_class> harmonic_sums(const Index& idx, int max_n) {
  auto coeffs = multipolylog_coefficients(idx, max_n);
  for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] += coeffs[i - 1];
  return coeffs;
}

std::vector<mpq_class> harmonic_sums(const WordPoly& w, int max_n) {
  auto coeffs = multipolylog_coefficients(w, max_n);
  for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] += coeffs[i - 1];
  return coeffs;
}

PadicScalar double_constrained_sum(int k, int l, const PadicScalar& t, int target, SeriesStats* stats) {
  if (k < 1 || l < 1) throw DomainError("double_constrained_sum needs k, l >= 1");
  check_polylog_argument(t);
  if (t.is_exact_zero()) return t;
  const PadicContext& ctx = t.context();
  const long threshold = target + 1;
  const long cutoff = polylog_cutoff(t.valuation(), k + l, threshold, ctx.prime());

  const PadicScalar one = PadicScalar::one(ctx), zero = PadicScalar::zero(ctx);
  ChainSums<PadicScalar> left(Index(static_cast<std::size_t>(k - 1), 1), one, zero);
  ChainSums<PadicScalar> right(Index(static_cast<std::size_t>(l - 1), 1), one, zero);
  PadicScalar sum = zero;
  PadicScalar tp = one;
  for (long m = 1; m <= cutoff; ++m) {
    const PadicScalar inv_m = PadicScalar::from_integer(m, ctx).inverse();
    auto inv_pow = [&](int e) { return pow(inv_m, e); };
    tp *= t;
    sum += left.top() * right.top() * tp * inv_m * inv_m;
    left.advance(inv_pow);
    right.advance(inv_pow);
  }
  if (stats) stats->terms = cutoff;
  return with_absolute_precision(sum, threshold);
}

mpq_class pochhammer(const mpq_class& a, long n) {
  mpq_class r = 1;
  for (long i = 0; i < n; ++i) r *= a + i;
  return r;
}

PadicScalar pochhammer(const PadicScalar& a, long n) {
  const PadicContext& ctx = a.context();
  PadicScalar r = PadicScalar::one(ctx);
  for (long i = 0; i < n; ++i) r *= a + PadicScalar::from_integer(i, ctx);
  return r;
}

mpz_class binomial(long m, long i) {
  if (i < 0 || i > m) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
  return r;
}

long hypergeometric_cutoff(std::span<const long> lower, long vz, long threshold, long p) {
  // (p-1) v(term_n) >= n vz (p-1) - (n-1) - sum_j (b_j + n - 2), from
  // v(n!) <= (n-1)/(p-1) and v((b)_n) <= v((b+n-1)!).
  const long r = static_cast<long>(lower.size());
  const long slope = vz * (p - 1) - 1 - r;
  if (slope <= 0) throw DomainError("series not certifiably convergent at z");
  long offset = 1;
  for (long b : lower) offset -= b - 2;
  // bound(n) = slope * n + offset >= threshold (p-1)
  const long need = threshold * (p - 1) - offset;
  long n0 = need <= 0 ? 1 : (need + slope - 1) / slope;
  n0 = std::max(n0, 1L);
  return n0 - 1;
}

long lower_parameter_value(const PadicScalar& b) {
  if (!b.is_exact()) throw DomainError("hypergeometric lower parameters must be exact positive integers");
  const mpq_class q = lift_to_rational(b);
  if (q.get_den() != 1 || q <= 0 || !q.get_num().fits_slong_p()) {
    throw DomainError("hypergeometric lower parameters must be exact positive integers");
  }
  return q.get_num().get_si();
}

}  // namespace pmahler
