#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pmahler/errors.hpp"
#include "pmahler/padic.hpp"

namespace pmahler {

using Exponent = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

template <class C>
struct LaurentCoeffTraits;

template <>
struct LaurentCoeffTraits<PadicScalar> {
  static bool is_zero(const PadicScalar& c) { return c.is_exact_zero(); }
  static long valuation(const PadicScalar& c) { return c.valuation(); }
  static PadicScalar big_oh(const PadicScalar& like, long n) { return PadicScalar::big_oh(n, like.context()); }
};

template <>
struct LaurentCoeffTraits<mpq_class> {
  static bool is_zero(const mpq_class& c) { return c == 0; }
  static long valuation(const mpq_class& c) { return c == 0 ? kInfinity : 0; }
  static mpq_class big_oh(const mpq_class& /*like*/, long /*n*/) { return 0; }
};

/// Sparse Laurent polynomial in n variables: exponent vector -> coefficient.
///
/// Coefficient rings with a valuation may also carry a precision floor F:
/// every monomial not stored is only known to be O(p^F). The floor is set
/// when small terms are discarded (see truncate_valuation) and propagates
/// through products; it is kInfinity for exact polynomials.
template <class C>
class LaurentPoly {
 public:
  using Traits = LaurentCoeffTraits<C>;
  using TermMap = std::map<Exponent, C>;

  LaurentPoly(int n_vars, C zero) : n_vars_(n_vars), zero_(std::move(zero)) {
    if (n_vars < 1) throw DomainError("Laurent polynomial needs at least one variable");
  }

  static LaurentPoly constant(int n_vars, const C& c, const C& zero) {
    LaurentPoly f(n_vars, zero);
    f.add_term(Exponent(static_cast<std::size_t>(n_vars), 0), c);
    return f;
  }

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const C& zero() const { return zero_; }
  long precision_floor() const { return floor_; }
  void set_precision_floor(long f) { floor_ = std::min(floor_, f); }

  void add_term(const Exponent& e, const C& c) {
    if (static_cast<int>(e.size()) != n_vars_) throw DomainError("exponent vector has the wrong length");
    if (Traits::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (Traits::is_zero(it->second)) terms_.erase(it);
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    if (it != terms_.end()) return it->second;
    if (floor_ < kInfinity) return Traits::big_oh(zero_, floor_);
    return zero_;
  }

  C constant_term() const { return coefficient(Exponent(static_cast<std::size_t>(n_vars_), 0)); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_vars(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    r.floor_ = std::min(a.floor_, b.floor_);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_vars(b);
    LaurentPoly r(a.n_vars_, a.zero_);
    Exponent e(static_cast<std::size_t>(a.n_vars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    // (f + O(p^F)) (g + O(p^G)) = fg + O(p^min(F + v(g), G + v(f), F + G))
    if (a.floor_ < kInfinity || b.floor_ < kInfinity) {
      long fl = kInfinity;
      if (a.floor_ < kInfinity) fl = std::min(fl, a.floor_ + std::min(b.min_valuation(), b.floor_));
      if (b.floor_ < kInfinity) fl = std::min(fl, b.floor_ + std::min(a.min_valuation(), a.floor_));
      r.floor_ = fl;
    }
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const C& c) {
    LaurentPoly r(a.n_vars_, a.zero_);
    for (const auto& [e, x] : a.terms_) r.add_term(e, x * c);
    if (a.floor_ < kInfinity) r.floor_ = a.floor_ + Traits::valuation(c);
    return r;
  }

  // Minimum valuation of the stored coefficients (kInfinity if none).
  long min_valuation() const {
    long v = kInfinity;
    for (const auto& [e, c] : terms_) v = std::min(v, Traits::valuation(c));
    return v;
  }

  // Largest |exponent| in any coordinate; 0 for the zero polynomial.
  int max_abs_exponent() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      for (int x : e) d = std::max(d, std::abs(x));
    }
    return d;
  }

  // Largest l1-norm of a support exponent.
  int max_l1_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += std::abs(x);
      d = std::max(d, s);
    }
    return d;
  }

 private:
  void check_vars(const LaurentPoly& o) const {
    if (n_vars_ != o.n_vars_) throw DomainError("Laurent polynomials in different numbers of variables");
  }

  int n_vars_;
  C zero_;
  TermMap terms_;
  long floor_ = kInfinity;
};

using PadicLaurent = LaurentPoly<PadicScalar>;

PadicLaurent laurent_mul(const PadicLaurent& f, const PadicLaurent& g);

// f * g with every coefficient of valuation >= n dropped (recorded as O(p^n));
// pairs whose valuations already sum to >= n are skipped.
PadicLaurent truncated_mul(const PadicLaurent& f, const PadicLaurent& g, long n);

// min coefficient valuation, including the precision floor.
long gauss_valuation(const PadicLaurent& f);

// Drops coefficients of valuation >= n and records O(p^n) as the floor.
PadicLaurent truncate_valuation(const PadicLaurent& f, long n);

// [f * g]_0 without forming the product.
PadicScalar constant_term_of_product(const PadicLaurent& f, const PadicLaurent& g);

struct UnitDecomposition {
  PadicScalar a;
  Exponent l;
  PadicLaurent g;
};

// f = a * t^l * (1 + g) with v(g) >= 1 and g having no constant term.
UnitDecomposition decompose_unit(const PadicLaurent& f);
PadicLaurent reassemble(const UnitDecomposition& d);

// t^v -> t^(S v).
template <class C>
LaurentPoly<C> substitute_monomials(const LaurentPoly<C>& f, const IntMatrix& s);

long integer_determinant(const IntMatrix& s);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);

template <class C>
LaurentPoly<C> substitute_monomials(const LaurentPoly<C>& f, const IntMatrix& s) {
  const auto n = static_cast<std::size_t>(f.n_vars());
  if (s.size() != n) throw DomainError("substitution matrix has the wrong size");
  for (const auto& row : s) {
    if (row.size() != n) throw DomainError("substitution matrix has the wrong size");
  }
  if (integer_determinant(s) == 0) throw DomainError("substitution matrix is singular");
  LaurentPoly<C> r(f.n_vars(), f.zero());
  Exponent e(n);
  for (const auto& [v, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<long>(s[i][j]) * v[j];
      e[i] = static_cast<int>(acc);
    }
    r.add_term(e, c);
  }
  r.set_precision_floor(f.precision_floor());
  return r;
}

std::string to_string(const PadicLaurent& f);

}  // namespace pmahler
