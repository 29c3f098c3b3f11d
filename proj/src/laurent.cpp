#include "pmahler/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace pmahler {

PadicLaurent laurent_mul(const PadicLaurent& f, const PadicLaurent& g) { return f * g; }

long gauss_valuation(const PadicLaurent& f) { return std::min(f.min_valuation(), f.precision_floor()); }

PadicLaurent truncate_valuation(const PadicLaurent& f, long n) {
  PadicLaurent r(f.n_vars(), f.zero());
  for (const auto& [e, c] : f.terms()) {
    if (c.valuation() < n) r.add_term(e, with_absolute_precision(c, n));
  }
  r.set_precision_floor(std::min(n, f.precision_floor()));
  return r;
}

PadicLaurent truncated_mul(const PadicLaurent& f, const PadicLaurent& g, long n) {
  if (f.n_vars() != g.n_vars()) throw DomainError("Laurent polynomials in different numbers of variables");
  const auto exact_zero = [](const PadicLaurent& h) { return h.is_zero() && h.precision_floor() == kInfinity; };
  if (exact_zero(f) || exact_zero(g)) return PadicLaurent(f.n_vars(), f.zero());
  std::vector<std::pair<const Exponent*, const PadicScalar*>> rhs;
  rhs.reserve(g.size());
  for (const auto& [e, c] : g.terms()) rhs.emplace_back(&e, &c);
  std::sort(rhs.begin(), rhs.end(), [](const auto& x, const auto& y) { return x.second->valuation() < y.second->valuation(); });

  PadicLaurent r(f.n_vars(), f.zero());
  Exponent e(static_cast<std::size_t>(f.n_vars()));
  for (const auto& [ea, ca] : f.terms()) {
    const long va = ca.valuation();
    for (const auto& [eb, cb] : rhs) {
      if (va + cb->valuation() >= n) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + (*eb)[i];
      r.add_term(e, ca * *cb);
    }
  }
  long fl = n;
  if (f.precision_floor() < kInfinity) fl = std::min(fl, f.precision_floor() + gauss_valuation(g));
  if (g.precision_floor() < kInfinity) fl = std::min(fl, g.precision_floor() + gauss_valuation(f));
  return truncate_valuation(r, fl);
}

PadicScalar constant_term_of_product(const PadicLaurent& f, const PadicLaurent& g) {
  if (f.n_vars() != g.n_vars()) throw DomainError("Laurent polynomials in different numbers of variables");
  PadicScalar acc = f.zero();
  Exponent neg(static_cast<std::size_t>(f.n_vars()));
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -e[i];
    auto it = g.terms().find(neg);
    if (it != g.terms().end()) acc += c * it->second;
  }
  if (f.precision_floor() < kInfinity || g.precision_floor() < kInfinity) {
    long fl = kInfinity;
    if (f.precision_floor() < kInfinity) fl = std::min(fl, f.precision_floor() + gauss_valuation(g));
    if (g.precision_floor() < kInfinity) fl = std::min(fl, g.precision_floor() + gauss_valuation(f));
    acc = with_absolute_precision(acc, fl);
  }
  return acc;
}

UnitDecomposition decompose_unit(const PadicLaurent& f) {
  if (f.is_zero()) throw NonvanishingError("the zero polynomial vanishes on the p-adic torus");
  long best = kInfinity;
  int count = 0;
  const Exponent* best_e = nullptr;
  const PadicScalar* best_c = nullptr;
  for (const auto& [e, c] : f.terms()) {
    const long v = c.valuation();
    if (v < best) {
      best = v;
      count = 1;
      best_e = &e;
      best_c = &c;
    } else if (v == best) {
      ++count;
    }
  }
  // An O(p^N) coefficient may hide a term as large as p^N.
  bool ambiguous = count != 1 || best_c->is_zero() || f.precision_floor() <= best;
  for (const auto& [e, c] : f.terms()) {
    if (&c != best_c && c.is_zero() && c.valuation() <= best) ambiguous = true;
  }
  if (ambiguous) {
    throw NonvanishingError(
        "f vanishes on the p-adic torus (no coefficient of strictly minimal valuation); "
        "m_{p,k} is undefined");
  }
  UnitDecomposition d{*best_c, *best_e, PadicLaurent(f.n_vars(), f.zero())};
  const PadicScalar inv = best_c->inverse();
  Exponent shifted(best_e->size());
  for (const auto& [e, c] : f.terms()) {
    if (&c == best_c) continue;
    for (std::size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] - (*best_e)[i];
    d.g.add_term(shifted, c * inv);
  }
  if (f.precision_floor() < kInfinity) d.g.set_precision_floor(f.precision_floor() - best);
  return d;
}

PadicLaurent reassemble(const UnitDecomposition& d) {
  const int n = d.g.n_vars();
  PadicLaurent one_plus_g = d.g + PadicLaurent::constant(n, PadicScalar::one(d.a.context()), d.g.zero());
  PadicLaurent monomial(n, d.g.zero());
  monomial.add_term(d.l, d.a);
  return monomial * one_plus_g;
}

long integer_determinant(const IntMatrix& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = s[i][j];
  }
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const mpq_class factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det.get_num().get_si();
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

std::string to_string(const PadicLaurent& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*t" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  if (f.precision_floor() < kInfinity) os << " + O(p^" << f.precision_floor() << ")";
  return os.str();
}

}  // namespace pmahler
