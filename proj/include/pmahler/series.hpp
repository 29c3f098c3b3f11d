#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "pmahler/hoffman.hpp"
#include "pmahler/padic.hpp"
#include "pmahler/ring.hpp"

namespace pmahler {

// Number of terms a certified series evaluation summed.
struct SeriesStats {
  long terms = 0;
};

// Li_k(t) = sum_{0<m_1<...<m_r} t^(m_r) / (m_1^k_1 ... m_r^k_r) for v(t) >= 1,
// certified to `target` digits.
PadicScalar multipolylog(const Index& idx, const PadicScalar& t, int target, SeriesStats* stats = nullptr);
PadicScalar multipolylog(const WordPoly& w, const PadicScalar& t, int target, SeriesStats* stats = nullptr);

// Coefficients of t^0..t^degree of Li_k(t) as exact rationals.
std::vector<mpq_class> multipolylog_coefficients(const Index& idx, int degree);
std::vector<mpq_class> multipolylog_coefficients(const WordPoly& w, int degree);

// Truncated harmonic sums H_n(k) = sum_{0<m_1<...<m_r<=n} 1/(m_1^k_1 ... m_r^k_r)
// for n = 0..max_n.
std::vector<mpq_class> harmonic_sums(const Index& idx, int max_n);
std::vector<mpq_class> harmonic_sums(const WordPoly& w, int max_n);

// sum over 0<m_1<...<m_{k-1}<m, 0<n_1<...<n_{l-1}<m of t^m / (m_1...m_{k-1} n_1...n_{l-1} m^2).
PadicScalar double_constrained_sum(int k, int l, const PadicScalar& t, int target, SeriesStats* stats = nullptr);

// (a)_n = a (a+1) ... (a+n-1).
mpq_class pochhammer(const mpq_class& a, long n);
PadicScalar pochhammer(const PadicScalar& a, long n);

// binom(m, i) and binom over rationals.
mpz_class binomial(long m, long i);

// r+1 upper parameters a_i (valuation floor >= 0), r lower parameters that
// must be exact positive integers, argument z:
//   sum_n (a_1)_n ... (a_{r+1})_n / ((b_1)_n ... (b_r)_n n!) z^n.
// Certified to `target` digits or DomainError if the tail cannot be bounded.
template <class R>
R hypergeometric(std::span<const R> upper, std::span<const PadicScalar> lower, const PadicScalar& z, int target,
                 SeriesStats* stats = nullptr);

// The cutoff used by hypergeometric: smallest M with every term n > M of
// valuation >= threshold. Throws when the lower bound does not grow.
long hypergeometric_cutoff(std::span<const long> lower, long vz, long threshold, long p);

// Exact positive integer value of a lower parameter; DomainError otherwise.
long lower_parameter_value(const PadicScalar& b);

// binom(s, 0..m_max) in ring R.
template <class R>
std::vector<R> binomial_coefficients(const R& s, long m_max) {
  using T = RingTraits<R>;
  const PadicContext& ctx = T::context(s);
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(m_max + 1));
  out.push_back(T::embed(s, PadicScalar::one(ctx)));
  for (long i = 0; i < m_max; ++i) {
    out.push_back(out.back() * (s - T::embed(s, PadicScalar::from_integer(i, ctx))) /
                  PadicScalar::from_integer(i + 1, ctx));
  }
  return out;
}

template <class R>
R hypergeometric(std::span<const R> upper, std::span<const PadicScalar> lower, const PadicScalar& z, int target,
                 SeriesStats* stats) {
  using T = RingTraits<R>;
  if (upper.size() != lower.size() + 1) throw DomainError("hypergeometric series needs r+1 upper and r lower parameters");
  const R& like = upper.front();
  const PadicContext& ctx = T::context(like);
  for (const auto& a : upper) {
    if (T::valuation_floor(a) < 0) throw DomainError("hypergeometric upper parameters must be p-adic integers");
  }
  std::vector<long> b;
  for (const auto& x : lower) b.push_back(lower_parameter_value(x));

  const R one = T::embed(like, PadicScalar::one(ctx));
  if (z.is_exact_zero()) return one;
  const long threshold = target + 1;
  const long cutoff = hypergeometric_cutoff(b, z.valuation(), threshold, ctx.prime());

  R sum = one;
  R term = one;
  long n = 0;
  for (; n < cutoff; ++n) {
    const PadicScalar pn = PadicScalar::from_integer(n, ctx);
    for (const auto& a : upper) term = term * (a + T::embed(like, pn));
    PadicScalar den = PadicScalar::from_integer(n + 1, ctx);
    for (long bj : b) den *= PadicScalar::from_integer(bj + n, ctx);
    term = term * z / den;
    if (T::is_exact_zero(term)) {
      if (stats) stats->terms = n + 1;
      return sum;
    }
    sum = sum + term;
  }
  if (stats) stats->terms = n + 1;
  return cap_precision(sum, threshold);
}

}  // namespace pmahler
