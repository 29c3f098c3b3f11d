#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pmahler/errors.hpp"

namespace pmahler {

// Valuation / precision value standing for +infinity (exact zero, exact values).
inline constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

/// Shared, immutable description of the p-adic arithmetic being done:
/// the prime, the number of digits the caller wants certified (target)
/// and the extra digits carried during computation (guard).
///
/// Copies are cheap handles onto the same data.
class PadicContext {
 public:
  PadicContext(long p, int target_precision, int guard_digits);

  long prime() const { return data_->p; }
  int target_precision() const { return data_->target; }
  int guard_digits() const { return data_->guard; }
  int working_precision() const { return data_->target + data_->guard; }

  // p^k for 0 <= k < cached_powers(); larger k via prime_power_value.
  const mpz_class& prime_power(long k) const;
  mpz_class prime_power_value(long k) const;
  long cached_powers() const { return static_cast<long>(data_->powers.size()); }

  bool operator==(const PadicContext& other) const;
  bool operator!=(const PadicContext& other) const { return !(*this == other); }

 private:
  friend class PadicScalar;
  PadicContext() = default;
  bool bound() const { return static_cast<bool>(data_); }

  struct Data {
    long p;
    int target;
    int guard;
    std::vector<mpz_class> powers;
  };
  std::shared_ptr<const Data> data_;
};

// Default guard: 2*ceil(log_p(longest series)) + 4.
int default_guard_digits(long p, long max_series_length);

/// An element p^v * u + O(p^(v + rel)) of Q_p.
///
/// Precision model is capped-relative: the unit carries at most
/// working_precision digits. Two states are distinguished from ordinary
/// approximations:
///  - exact zero (valuation kInfinity), and
///  - exact values: the balanced lift of the unit digits (in
///    (-p^rel/2, p^rel/2)) times p^v is the value exactly. These come
///    from integer literals and stay exact under ring operations while
///    the result still fits.
/// "Zero to precision N" is an inexact scalar with valuation N and rel 0.
class PadicScalar {
 public:
  // Exact zero not bound to any context. Adopts the context of the other
  // operand in arithmetic.
  PadicScalar() = default;

  static PadicScalar zero(const PadicContext& ctx);
  static PadicScalar one(const PadicContext& ctx);
  static PadicScalar from_integer(const mpz_class& n, const PadicContext& ctx);
  static PadicScalar from_integer(long n, const PadicContext& ctx);
  // O(p^n).
  static PadicScalar big_oh(long n, const PadicContext& ctx);
  // p^v * unit + O(p^(v+rel)); unit is reduced and p-stripped.
  static PadicScalar from_parts(long v, const mpz_class& unit, long rel, const PadicContext& ctx);

  bool has_context() const { return ctx_.bound(); }
  const PadicContext& context() const;
  long prime() const { return context().prime(); }

  bool is_exact_zero() const { return exact_ && val_ == kInfinity; }
  bool is_exact() const { return exact_; }
  // True for exact zero and for O(p^N).
  bool is_zero() const { return is_exact_zero() || rel_ == 0; }

  // kInfinity for exact zero; N for O(p^N).
  long valuation() const { return val_; }
  const mpz_class& unit() const { return unit_; }
  long relative_precision() const { return rel_; }
  // kInfinity for exact values.
  long absolute_precision() const;

  // Balanced representative of the unit digits, |u| < p^rel / 2.
  mpz_class signed_unit() const;

  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
  PadicScalar& operator/=(const PadicScalar& o) { return *this = *this / o; }

  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

  PadicScalar inverse() const;

  // Digits a_0..a_{k} of the expansion starting at p^valuation.
  std::vector<long> digits() const;
  // "a_0 + a_1*p + ... + O(p^N)" with p written as a numeral.
  std::string to_string() const;
  // "(v, u mod p^rel)".
  std::string to_compact_string() const;

 private:
  friend class PadicOps;

  PadicContext ctx_;
  long val_ = kInfinity;
  mpz_class unit_ = 0;
  long rel_ = 0;
  bool exact_ = true;
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

PadicScalar from_rational(const mpz_class& num, const mpz_class& den, const PadicContext& ctx);
PadicScalar from_rational(const mpq_class& q, const PadicContext& ctx);
inline PadicScalar from_rational(long num, long den, const PadicContext& ctx) {
  return from_rational(mpz_class(num), mpz_class(den), ctx);
}

// x^n, n may be negative.
PadicScalar pow(const PadicScalar& x, long n);

// Caps the absolute precision at n (result is no longer exact).
PadicScalar with_absolute_precision(const PadicScalar& x, long n);

// Valuation of a - b as far as both operands are known; kInfinity when
// both are exact and equal.
long agreement(const PadicScalar& a, const PadicScalar& b);

// The rational p^v * u for the digits known; used by tests and display.
mpq_class lift_to_rational(const PadicScalar& x);
// Residue of a (valuation >= 0) modulo p^n as an integer in [0, p^n).
mpz_class residue_mod(const PadicScalar& x, long n);

// v_p(n) for n != 0.
long valuation_of(const mpz_class& n, long p);
// floor(log_p m) for m >= 1.
long floor_log(long m, long p);
// v_p(n!) by Legendre's formula.
long factorial_valuation(long n, long p);

struct AngleDecomposition {
  long valuation;
  PadicScalar teichmuller;
  PadicScalar angle;
};

AngleDecomposition angle_decompose(const PadicScalar& a);
PadicScalar teichmueller(const PadicScalar& a);
PadicScalar padic_log(const PadicScalar& a);
PadicScalar padic_exp(const PadicScalar& x);
PadicScalar binom_padic(const PadicScalar& s, long n);
PadicScalar angle_power(const PadicScalar& a, const PadicScalar& s);

// Largest m >= 0 such that bound(m) < threshold, given that bound(m) >= threshold
// for every m >= tail_start. Used to pick certified series cutoffs.
template <class F>
long last_failing_index(F bound, long threshold, long tail_start) {
  long last = 0;
  for (long m = 1; m < tail_start; ++m) {
    if (bound(m) < threshold) last = m;
  }
  return last;
}

// Smallest M such that m*v - weight*floor(log_p m) >= threshold for all m > M.
// Requires v >= 1.
long polylog_cutoff(long v, long weight, long threshold, long p);

}  // namespace pmahler
