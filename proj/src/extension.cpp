#include "pmahler/extension.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pmahler {

namespace {

using ModPoly = std::vector<long>;  // low degree first, coefficients in [0, p)

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    const long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, p);
}

ModPoly poly_mod(ModPoly a, const ModPoly& b, long p) {
  trim(a);
  const long lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const long factor = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - factor * b[i], p);
    trim(a);
  }
  return a;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  }
  return poly_mod(std::move(r), m, p);
}

ModPoly poly_powmod(ModPoly base, long e, const ModPoly& m, long p) {
  ModPoly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, m, p);
  }
  return poly_mod(result, m, p);
}

ModPoly poly_gcd(ModPoly a, ModPoly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly monic_poly(const std::vector<long>& low) {
  ModPoly m(low.begin(), low.end());
  m.push_back(1);
  return m;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

ModPoly residue_from_index(long idx, int f, long p) {
  ModPoly a(static_cast<std::size_t>(f), 0);
  for (int i = 0; i < f; ++i) {
    a[static_cast<std::size_t>(i)] = idx % p;
    idx /= p;
  }
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<long>& low_coeffs, long p) {
  const ModPoly m = monic_poly(low_coeffs);
  const int f = static_cast<int>(low_coeffs.size());
  if (f <= 1) return true;
  // No factor of degree d <= f/2  <=>  gcd(x^(p^d) - x, P) = 1 for all such d.
  ModPoly x_power{0, 1};
  for (int d = 1; d <= f / 2; ++d) {
    x_power = poly_powmod(x_power, p, m, p);
    ModPoly diff = x_power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

UnramifiedField make_unramified(const PadicContext& ctx, int f) {
  if (f < 1) throw DomainError("extension degree must be >= 1");
  const long p = ctx.prime();
  long q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  std::vector<long> poly(static_cast<std::size_t>(f), 0);
  if (f > 1) {
    // Enumerate (c_{f-1}, ..., c_0) in lexicographic order.
    for (long idx = 0; idx < q; ++idx) {
      long rest = idx;
      for (int i = 0; i < f; ++i) {
        poly[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      if (is_irreducible_mod_p(poly, p)) break;
    }
  }
  return UnramifiedField(std::make_shared<const UnramifiedField::Data>(UnramifiedField::Data{ctx, f, poly, q}));
}

// ---------------------------------------------------------------------------
// ExtScalar

ExtScalar::ExtScalar(UnramifiedField field, std::vector<PadicScalar> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const auto f = static_cast<std::size_t>(field_.degree());
  if (coeffs_.size() > f) throw DomainError("too many coefficients for the extension degree");
  coeffs_.resize(f, PadicScalar::zero(field_.context()));
  for (auto& c : coeffs_) {
    if (!c.has_context()) c = PadicScalar::zero(field_.context());
  }
}

ExtScalar ExtScalar::embed(const UnramifiedField& field, const PadicScalar& c) { return ExtScalar(field, {c}); }

long ExtScalar::valuation() const {
  long v = kInfinity;
  for (const auto& c : coeffs_) v = std::min(v, c.valuation());
  return v;
}

long ExtScalar::absolute_precision() const {
  long a = kInfinity;
  for (const auto& c : coeffs_) a = std::min(a, c.absolute_precision());
  return a;
}

bool ExtScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicScalar& c) { return c.is_zero(); });
}

ExtScalar ExtScalar::operator-() const {
  ExtScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  ExtScalar r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  const auto f = static_cast<std::size_t>(a.field_.degree());
  const PadicContext& ctx = a.field_.context();
  std::vector<PadicScalar> prod(2 * f - 1, PadicScalar::zero(ctx));
  for (std::size_t i = 0; i < f; ++i) {
    if (a.coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < f; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  // x^f = -(c_0 + ... + c_{f-1} x^{f-1})
  const auto& poly = a.field_.defining_coefficients();
  for (std::size_t d = prod.size() - 1; d >= f; --d) {
    if (prod[d].is_exact_zero()) continue;
    for (std::size_t i = 0; i < f; ++i) {
      if (poly[i] == 0) continue;
      prod[d - f + i] -= prod[d] * PadicScalar::from_integer(poly[i], ctx);
    }
    prod[d] = PadicScalar::zero(ctx);
  }
  prod.resize(f);
  return ExtScalar(a.field_, std::move(prod));
}

ExtScalar operator*(const ExtScalar& a, const PadicScalar& c) {
  ExtScalar r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

ExtScalar operator/(const ExtScalar& a, const PadicScalar& c) {
  ExtScalar r = a;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

ExtScalar ExtScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in an unramified extension");
  const PadicContext& ctx = field_.context();
  const long v = valuation();
  const PadicScalar shift = pow(PadicScalar::from_integer(ctx.prime(), ctx), v);
  const ExtScalar unit = *this / shift;
  if (field_.degree() == 1) return ExtScalar(field_, {unit.coeffs_[0].inverse() / shift});
  // u^(q-2) inverts u modulo p; Newton steps y <- y (2 - u y) double the digits.
  ExtScalar y = pow(unit, field_.residue_field_size() - 2);
  const ExtScalar two = ExtScalar::embed(field_, PadicScalar::from_integer(2, ctx));
  for (long digits = 1; digits < 2L * ctx.working_precision(); digits *= 2) {
    y = y * (two - unit * y);
  }
  return y / shift;
}

std::string ExtScalar::to_string() const {
  if (field_.degree() == 1) return coeffs_[0].to_string();
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.to_string(); }

ExtScalar pow(const ExtScalar& x, long n) {
  if (n < 0) return pow(x.inverse(), -n);
  ExtScalar result = ExtScalar::embed(x.field(), PadicScalar::one(x.field().context()));
  ExtScalar base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

long agreement(const ExtScalar& a, const ExtScalar& b) { return (a - b).valuation(); }

ExtScalar ext_log(const ExtScalar& x) {
  if (x.is_zero()) throw DomainError("log_p of zero");
  const UnramifiedField& field = x.field();
  const PadicContext& ctx = field.context();
  const PadicScalar shift = pow(PadicScalar::from_integer(ctx.prime(), ctx), x.valuation());
  const long q = field.residue_field_size();
  const ExtScalar one = ExtScalar::embed(field, PadicScalar::one(ctx));
  const ExtScalar y = pow(x / shift, q - 1) - one;
  const long threshold = ctx.target_precision() + 1;
  if (y.valuation() >= threshold) {
    return ExtScalar::embed(field, PadicScalar::big_oh(threshold, ctx));
  }
  const long cutoff = polylog_cutoff(y.valuation(), 1, threshold, ctx.prime());
  ExtScalar sum = ExtScalar::embed(field, PadicScalar::zero(ctx));
  ExtScalar power = y;
  for (long m = 1; m <= cutoff; ++m) {
    const ExtScalar term = power / PadicScalar::from_integer(m % 2 == 1 ? m : -m, ctx);
    sum += term;
    power *= y;
  }
  sum = sum / PadicScalar::from_integer(q - 1, ctx);
  std::vector<PadicScalar> capped;
  for (const auto& c : sum.coefficients()) capped.push_back(with_absolute_precision(c, threshold));
  return ExtScalar(field, std::move(capped));
}

std::vector<ExtScalar> roots_of_unity(const UnramifiedField& field, long n) {
  const PadicContext& ctx = field.context();
  const long p = ctx.prime();
  const long q = field.residue_field_size();
  if (n < 1) throw DomainError("roots of unity need N >= 1");
  if (n % p == 0) throw DomainError("p divides N: mu_N is not unramified");
  if ((q - 1) % n != 0) throw DomainError("mu_N not contained in this field (N does not divide p^f - 1)");
  const int f = field.degree();
  const ModPoly m = monic_poly(field.defining_coefficients());
  const std::vector<long> factors = prime_factors(q - 1);

  // Smallest primitive element of the residue field, then its ((q-1)/N)-th power.
  ModPoly generator;
  for (long idx = 1; idx < q; ++idx) {
    const ModPoly cand = residue_from_index(idx, f, p);
    bool primitive = true;
    for (long l : factors) {
      const ModPoly t = poly_powmod(cand, (q - 1) / l, m, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = cand;
      break;
    }
  }
  ModPoly residue = poly_powmod(generator, (q - 1) / n, m, p);
  residue.resize(static_cast<std::size_t>(f), 0);

  std::vector<PadicScalar> lift;
  for (long c : residue) lift.push_back(PadicScalar::from_integer(c, ctx));
  ExtScalar zeta(field, std::move(lift));
  // Teichmueller lift: x -> x^q gains one digit per step.
  for (int i = 0; i < ctx.working_precision() + 1; ++i) {
    const ExtScalar next = pow(zeta, q);
    if (agreement(next, zeta) >= ctx.working_precision() && i > 0) {
      zeta = next;
      break;
    }
    zeta = next;
  }
  std::vector<ExtScalar> roots;
  roots.reserve(static_cast<std::size_t>(n));
  ExtScalar current = ExtScalar::embed(field, PadicScalar::one(ctx));
  for (long i = 0; i < n; ++i) {
    roots.push_back(current);
    current *= zeta;
  }
  return roots;
}

ExtScalar eval_laurent(const PadicLaurent& f, const std::vector<ExtScalar>& point) {
  if (static_cast<int>(point.size()) != f.n_vars()) throw DomainError("point has the wrong number of coordinates");
  if (point.empty()) throw DomainError("empty evaluation point");
  const UnramifiedField& field = point.front().field();
  const PadicContext& ctx = field.context();
  std::vector<ExtScalar> inverses;
  for (const auto& z : point) {
    if (z.valuation() != 0 || z.is_zero()) throw DomainError("evaluation point coordinates must be units");
    inverses.push_back(z.inverse());
  }
  ExtScalar acc = ExtScalar::embed(field, PadicScalar::zero(ctx));
  for (const auto& [e, c] : f.terms()) {
    ExtScalar term = ExtScalar::embed(field, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= pow(point[i], e[i]);
      if (e[i] < 0) term *= pow(inverses[i], -e[i]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace pmahler
