#include "pmahler/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pmahler {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// PadicContext

PadicContext::PadicContext(long p, int target_precision, int guard_digits) {
  if (p == 2) throw DomainError("p = 2 is not supported; use an odd prime");
  if (!is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
  if (target_precision < 1) throw DomainError("target precision must be >= 1");
  if (guard_digits < 0) throw DomainError("guard digits must be >= 0");
  auto data = std::make_shared<Data>();
  data->p = p;
  data->target = target_precision;
  data->guard = guard_digits;
  const long n_cache = 4L * (target_precision + guard_digits) + 256;
  data->powers.reserve(static_cast<std::size_t>(n_cache));
  mpz_class power = 1;
  for (long k = 0; k < n_cache; ++k) {
    data->powers.push_back(power);
    power *= p;
  }
  data_ = std::move(data);
}

const mpz_class& PadicContext::prime_power(long k) const {
  return data_->powers.at(static_cast<std::size_t>(k));
}

mpz_class PadicContext::prime_power_value(long k) const {
  if (k < cached_powers()) return prime_power(k);
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(data_->p), static_cast<unsigned long>(k));
  return r;
}

bool PadicContext::operator==(const PadicContext& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->target == other.data_->target &&
         data_->guard == other.data_->guard;
}

int default_guard_digits(long p, long max_series_length) {
  long e = 0;
  long power = 1;
  while (power < max_series_length) {
    power *= p;
    ++e;
  }
  return static_cast<int>(2 * e + 4);
}

// ---------------------------------------------------------------------------
// helpers

long valuation_of(const mpz_class& n, long p) {
  if (n == 0) return kInfinity;
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long floor_log(long m, long p) {
  long e = 0;
  long power = p;
  while (power <= m) {
    power *= p;
    ++e;
  }
  return e;
}

long factorial_valuation(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;
  }
  return v;
}

long polylog_cutoff(long v, long weight, long threshold, long p) {
  if (v < 1) throw DomainError("series cutoff needs a positive valuation");
  // On m in [p^e, p^(e+1)) the bound is at least p^e*v - weight*e.
  long e = 0;
  long block = 1;
  for (;;) {
    const bool large = block * v - weight * e >= threshold;
    const bool increasing = block * (p - 1) * v >= weight;
    if (large && increasing) break;
    block *= p;
    ++e;
  }
  auto bound = [&](long m) { return m * v - weight * floor_log(m, p); };
  return last_failing_index(bound, threshold, block);
}

class PadicOps {
 public:
  static PadicScalar make_exact(long v, mpz_class u, const PadicContext& ctx);
  static PadicScalar make_inexact(long v, const mpz_class& u, long abs_prec, const PadicContext& ctx);
  static long rel_of(const PadicScalar& x) {
    return x.exact_ ? x.ctx_.working_precision() : x.rel_;
  }
  static long abs_cap(const PadicScalar& x) {
    if (x.is_exact_zero()) return kInfinity;
    return x.val_ + rel_of(x);
  }
  static PadicContext pick_context(const PadicScalar& a, const PadicScalar& b) {
    if (a.has_context() && b.has_context() && a.ctx_ != b.ctx_) {
      throw DomainError("p-adic operands come from different contexts");
    }
    return a.has_context() ? a.ctx_ : b.ctx_;
  }
  static PadicScalar exact_zero_in(const PadicContext& ctx) {
    PadicScalar z;
    z.ctx_ = ctx;
    return z;
  }
  static void set_context(PadicScalar& x, const PadicContext& ctx) { x.ctx_ = ctx; }
};

// Exact p^v * u (u arbitrary signed integer). Falls back to an inexact
// scalar with full working precision when the unit does not fit.
PadicScalar PadicOps::make_exact(long v, mpz_class u, const PadicContext& ctx) {
  PadicScalar r;
  r.ctx_ = ctx;
  if (u == 0) return r;
  const long p = ctx.prime();
  mpz_class prime(p);
  const long k = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), prime.get_mpz_t()));
  const long nw = ctx.working_precision();
  const mpz_class& modulus = ctx.prime_power(nw);
  r.val_ = v + k;
  r.rel_ = nw;
  mpz_class twice = 2 * abs(u);
  r.exact_ = twice < modulus;
  mpz_fdiv_r(r.unit_.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// p^v * u + O(p^abs_prec).
PadicScalar PadicOps::make_inexact(long v, const mpz_class& u, long abs_prec, const PadicContext& ctx) {
  PadicScalar r;
  r.ctx_ = ctx;
  r.exact_ = false;
  if (abs_prec <= v || u == 0) {
    r.val_ = abs_prec;
    r.rel_ = 0;
    r.unit_ = 0;
    return r;
  }
  mpz_class w = u;
  mpz_class prime(ctx.prime());
  const long k = static_cast<long>(mpz_remove(w.get_mpz_t(), w.get_mpz_t(), prime.get_mpz_t()));
  if (v + k >= abs_prec) {
    r.val_ = abs_prec;
    r.rel_ = 0;
    r.unit_ = 0;
    return r;
  }
  r.val_ = v + k;
  r.rel_ = std::min<long>(abs_prec - r.val_, ctx.working_precision());
  mpz_fdiv_r(r.unit_.get_mpz_t(), w.get_mpz_t(), ctx.prime_power(r.rel_).get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// PadicScalar

PadicScalar PadicScalar::zero(const PadicContext& ctx) { return PadicOps::exact_zero_in(ctx); }

PadicScalar PadicScalar::one(const PadicContext& ctx) { return PadicOps::make_exact(0, 1, ctx); }

PadicScalar PadicScalar::from_integer(const mpz_class& n, const PadicContext& ctx) {
  return PadicOps::make_exact(0, n, ctx);
}

PadicScalar PadicScalar::from_integer(long n, const PadicContext& ctx) {
  return PadicOps::make_exact(0, mpz_class(n), ctx);
}

PadicScalar PadicScalar::big_oh(long n, const PadicContext& ctx) {
  return PadicOps::make_inexact(n, 0, n, ctx);
}

PadicScalar PadicScalar::from_parts(long v, const mpz_class& unit, long rel, const PadicContext& ctx) {
  return PadicOps::make_inexact(v, unit, v + rel, ctx);
}

const PadicContext& PadicScalar::context() const {
  if (!has_context()) throw DomainError("p-adic scalar is not bound to a context");
  return ctx_;
}

long PadicScalar::absolute_precision() const {
  if (exact_) return kInfinity;
  return val_ + rel_;
}

mpz_class PadicScalar::signed_unit() const {
  if (rel_ == 0) return 0;
  const mpz_class& modulus = ctx_.prime_power(rel_);
  if (2 * unit_ > modulus) return unit_ - modulus;
  return unit_;
}

PadicScalar PadicScalar::operator-() const {
  PadicScalar r = *this;
  if (rel_ > 0 && unit_ != 0) r.unit_ = ctx_.prime_power(rel_) - unit_;
  return r;
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  if (a.is_exact_zero()) {
    PadicScalar r = b;
    if (!r.has_context() && a.has_context()) PadicOps::set_context(r, a.context());
    return r;
  }
  if (b.is_exact_zero()) {
    PadicScalar r = a;
    if (!r.has_context() && b.has_context()) PadicOps::set_context(r, b.context());
    return r;
  }
  const PadicContext ctx = PadicOps::pick_context(a, b);
  const long vmin = std::min(a.val_, b.val_);
  const long nw = ctx.working_precision();
  if (a.exact_ && b.exact_ && std::abs(a.val_ - b.val_) < nw) {
    mpz_class u = a.signed_unit() * ctx.prime_power(a.val_ - vmin) +
                  b.signed_unit() * ctx.prime_power(b.val_ - vmin);
    return PadicOps::make_exact(vmin, std::move(u), ctx);
  }
  const long abs_prec = std::min(PadicOps::abs_cap(a), PadicOps::abs_cap(b));
  if (abs_prec <= vmin) return PadicScalar::big_oh(abs_prec, ctx);
  mpz_class u = 0;
  if (a.val_ < abs_prec) u += a.unit_ * ctx.prime_power(a.val_ - vmin);
  if (b.val_ < abs_prec) u += b.unit_ * ctx.prime_power(b.val_ - vmin);
  return PadicOps::make_inexact(vmin, u, abs_prec, ctx);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) {
    const PadicContext ctx = a.has_context() ? a.ctx_ : b.ctx_;
    return PadicOps::exact_zero_in(ctx);
  }
  const PadicContext ctx = PadicOps::pick_context(a, b);
  const long v = a.val_ + b.val_;
  if (a.exact_ && b.exact_) return PadicOps::make_exact(v, a.signed_unit() * b.signed_unit(), ctx);
  const long rel = std::min(PadicOps::rel_of(a), PadicOps::rel_of(b));
  if (rel == 0) return PadicScalar::big_oh(v, ctx);
  PadicScalar r;
  PadicOps::set_context(r, ctx);
  r.exact_ = false;
  r.val_ = v;
  r.rel_ = rel;
  mpz_mul(r.unit_.get_mpz_t(), a.unit_.get_mpz_t(), b.unit_.get_mpz_t());
  mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), ctx.prime_power(rel).get_mpz_t());
  return r;
}

PadicScalar PadicScalar::inverse() const {
  if (is_zero()) throw DomainError("division by a p-adic zero");
  if (exact_) {
    const mpz_class s = signed_unit();
    if (s == 1 || s == -1) return PadicOps::make_exact(-val_, s, ctx_);
  }
  PadicScalar r;
  r.ctx_ = ctx_;
  r.exact_ = false;
  r.val_ = -val_;
  r.rel_ = rel_;
  mpz_invert(r.unit_.get_mpz_t(), unit_.get_mpz_t(), ctx_.prime_power(rel_).get_mpz_t());
  return r;
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  if (b.is_zero()) throw DomainError("division by a p-adic zero");
  if (a.is_exact_zero()) return PadicOps::exact_zero_in(PadicOps::pick_context(a, b));
  if (a.exact_ && b.exact_) {
    const mpz_class sa = a.signed_unit();
    const mpz_class sb = b.signed_unit();
    if (mpz_divisible_p(sa.get_mpz_t(), sb.get_mpz_t()) != 0) {
      return PadicOps::make_exact(a.val_ - b.val_, sa / sb, PadicOps::pick_context(a, b));
    }
  }
  return a * b.inverse();
}

std::vector<long> PadicScalar::digits() const {
  std::vector<long> out;
  if (is_exact_zero() || rel_ == 0) return out;
  const long p = ctx_.prime();
  const long n = exact_ && signed_unit() >= 0 ? static_cast<long>(mpz_sizeinbase(unit_.get_mpz_t(), p)) + 1
                                              : rel_;
  mpz_class rest = unit_;
  for (long i = 0; i < std::min(n, rel_); ++i) {
    mpz_class d;
    mpz_fdiv_qr_ui(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(d.get_si());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  if (!has_context()) return "0";
  const long p = ctx_.prime();
  if (is_exact_zero()) return "0";
  bool first = true;
  auto term = [&](long digit, long e) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << digit;
      return;
    }
    if (digit != 1) os << digit << "*";
    os << p;
    if (e != 1) os << "^" << e;
  };
  const std::vector<long> ds = digits();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] != 0) term(ds[i], val_ + static_cast<long>(i));
  }
  const bool finite_exact = exact_ && signed_unit() >= 0;
  if (!finite_exact) {
    if (!first) os << " + ";
    os << "O(" << p << "^" << (exact_ ? val_ + rel_ : absolute_precision()) << ")";
  }
  return os.str();
}

std::string PadicScalar::to_compact_string() const {
  if (is_exact_zero()) return "(inf, 0)";
  std::ostringstream os;
  os << "(" << val_ << ", " << unit_.get_str() << " mod " << ctx_.prime() << "^" << rel_;
  if (exact_) os << ", exact";
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.to_string(); }

PadicScalar from_rational(const mpz_class& num, const mpz_class& den, const PadicContext& ctx) {
  if (den == 0) throw DomainError("rational literal with zero denominator");
  if (num == 0) return PadicScalar::zero(ctx);
  mpz_class n = num;
  mpz_class d = den;
  mpz_class prime(ctx.prime());
  const long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t()));
  if (d < 0) {
    d = -d;
    n = -n;
  }
  if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
    return PadicOps::make_exact(vn - vd, n / d, ctx);
  }
  const long nw = ctx.working_precision();
  const mpz_class& modulus = ctx.prime_power(nw);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
  mpz_class u = n * inv;
  return PadicOps::make_inexact(vn - vd, u, vn - vd + nw, ctx);
}

PadicScalar from_rational(const mpq_class& q, const PadicContext& ctx) {
  return from_rational(q.get_num(), q.get_den(), ctx);
}

PadicScalar pow(const PadicScalar& x, long n) {
  if (n < 0) return pow(x.inverse(), -n);
  PadicScalar result = x.has_context() ? PadicScalar::one(x.context()) : PadicScalar();
  if (!x.has_context()) {
    if (n == 0) throw DomainError("0^0 with an unbound scalar");
    return x;
  }
  PadicScalar base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

PadicScalar with_absolute_precision(const PadicScalar& x, long n) {
  const PadicContext& ctx = x.context();
  if (x.is_exact_zero() || x.valuation() >= n) return PadicScalar::big_oh(n, ctx);
  const long abs_prec = std::min(x.absolute_precision(), n);
  return PadicOps::make_inexact(x.valuation(), x.unit(), abs_prec, ctx);
}

long agreement(const PadicScalar& a, const PadicScalar& b) { return (a - b).valuation(); }

mpq_class lift_to_rational(const PadicScalar& x) {
  if (x.is_zero()) return 0;
  mpq_class r(x.is_exact() ? x.signed_unit() : x.unit());
  const PadicContext& ctx = x.context();
  if (x.valuation() >= 0) {
    r *= ctx.prime_power_value(x.valuation());
  } else {
    r /= ctx.prime_power_value(-x.valuation());
  }
  r.canonicalize();
  return r;
}

mpz_class residue_mod(const PadicScalar& x, long n) {
  const PadicContext& ctx = x.context();
  if (x.valuation() < 0) throw DomainError("residue of a non-integral p-adic number");
  if (x.absolute_precision() < n) throw DomainError("not enough digits for the requested residue");
  if (x.is_zero() || x.valuation() >= n) return 0;
  mpz_class r = x.unit() * ctx.prime_power(x.valuation());
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), ctx.prime_power_value(n).get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// analytic primitives

PadicScalar teichmueller(const PadicScalar& a) {
  const PadicContext& ctx = a.context();
  if (a.is_zero() || a.valuation() != 0) throw DomainError("Teichmueller lift needs a p-adic unit");
  const long p = ctx.prime();
  const long residue = mpz_fdiv_ui(a.unit().get_mpz_t(), static_cast<unsigned long>(p));
  if (residue == 1) return PadicScalar::one(ctx);
  if (residue == p - 1) return PadicScalar::from_integer(-1, ctx);
  const long nw = ctx.working_precision();
  const mpz_class& modulus = ctx.prime_power(nw);
  mpz_class x = residue;
  mpz_class prime(p);
  for (long i = 0; i < nw + 1; ++i) {
    mpz_class next;
    mpz_powm(next.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t(), modulus.get_mpz_t());
    if (next == x) break;
    x = next;
  }
  return PadicScalar::from_parts(0, x, nw, ctx);
}

AngleDecomposition angle_decompose(const PadicScalar& a) {
  if (a.is_zero()) throw DomainError("angle decomposition of zero");
  const PadicContext& ctx = a.context();
  const long v = a.valuation();
  const PadicScalar unit_part = a / pow(PadicScalar::from_integer(ctx.prime(), ctx), v);
  PadicScalar omega = teichmueller(unit_part);
  PadicScalar angle = unit_part / omega;
  return {v, std::move(omega), std::move(angle)};
}

PadicScalar padic_log(const PadicScalar& a) {
  if (a.is_zero()) throw DomainError("log_p of zero");
  const PadicContext& ctx = a.context();
  const PadicScalar x = angle_decompose(a).angle - PadicScalar::one(ctx);
  if (x.is_exact_zero()) return PadicScalar::zero(ctx);
  const long threshold = ctx.target_precision() + 1;
  if (x.valuation() >= threshold) return PadicScalar::big_oh(threshold, ctx);
  const long cutoff = polylog_cutoff(x.valuation(), 1, threshold, ctx.prime());
  PadicScalar sum = PadicScalar::zero(ctx);
  PadicScalar power = x;
  for (long m = 1; m <= cutoff; ++m) {
    const PadicScalar term = power / PadicScalar::from_integer(m, ctx);
    sum = (m % 2 == 1) ? sum + term : sum - term;
    power *= x;
  }
  return with_absolute_precision(sum, threshold);
}

PadicScalar padic_exp(const PadicScalar& x) {
  const PadicContext& ctx = x.context();
  if (x.is_exact_zero()) return PadicScalar::one(ctx);
  if (x.valuation() <= 0) throw DomainError("outside exp disc");
  const long p = ctx.prime();
  const long threshold = ctx.target_precision() + 1;
  const long v = x.valuation();
  // m*v - (m-1)/(p-1) >= threshold, compared as integers after scaling by p-1.
  auto ok = [&](long m) { return (m * v * (p - 1) - (m - 1)) >= threshold * (p - 1); };
  long cutoff = 0;
  while (!ok(cutoff + 1)) ++cutoff;
  PadicScalar sum = PadicScalar::one(ctx);
  PadicScalar term = PadicScalar::one(ctx);
  for (long m = 1; m <= cutoff; ++m) {
    term = term * x / PadicScalar::from_integer(m, ctx);
    sum += term;
  }
  return with_absolute_precision(sum, threshold);
}

PadicScalar binom_padic(const PadicScalar& s, long n) {
  if (n < 0) throw DomainError("binomial coefficient with negative n");
  const PadicContext& ctx = s.context();
  PadicScalar acc = PadicScalar::one(ctx);
  for (long i = 0; i < n; ++i) {
    acc = acc * (s - PadicScalar::from_integer(i, ctx)) / PadicScalar::from_integer(i + 1, ctx);
  }
  return acc;
}

PadicScalar angle_power(const PadicScalar& a, const PadicScalar& s) {
  const PadicContext& ctx = a.context();
  if (!s.is_exact_zero() && s.valuation() < 0) throw DomainError("|s| > 1: outside closed unit disc");
  const PadicScalar x = angle_decompose(a).angle - PadicScalar::one(ctx);
  if (x.is_exact_zero()) return PadicScalar::one(ctx);
  const long threshold = ctx.target_precision() + 1;
  // binom(s, n) is a p-adic integer, so term n has valuation >= n*v(x).
  const long cutoff = (threshold + x.valuation() - 1) / x.valuation() - 1;
  PadicScalar sum = PadicScalar::one(ctx);
  PadicScalar coeff = PadicScalar::one(ctx);
  PadicScalar power = PadicScalar::one(ctx);
  for (long n = 1; n <= cutoff; ++n) {
    coeff = coeff * (s - PadicScalar::from_integer(n - 1, ctx)) / PadicScalar::from_integer(n, ctx);
    if (coeff.is_exact_zero()) return sum;  // s is a nonnegative integer
    power *= x;
    sum += coeff * power;
  }
  return with_absolute_precision(sum, threshold);
}

}  // namespace pmahler
