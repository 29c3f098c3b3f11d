#pragma once

#include <concepts>

#include <gmpxx.h>

#include "pmahler/padic.hpp"
#include "pmahler/sjet.hpp"

namespace pmahler {

// Coefficient rings the generic series code runs over. Each provides
// embedding of p-adic scalars and exact rationals "like" a sample element
// (so that context and jet order carry over), and a valuation floor.
template <class R>
struct RingTraits;

template <>
struct RingTraits<PadicScalar> {
  static PadicScalar embed(const PadicScalar& /*like*/, const PadicScalar& c) { return c; }
  static PadicScalar embed_rational(const PadicScalar& like, const mpq_class& q) {
    return from_rational(q, like.context());
  }
  static long valuation_floor(const PadicScalar& x) { return x.valuation(); }
  static long absolute_precision(const PadicScalar& x) { return x.absolute_precision(); }
  static bool is_exact_zero(const PadicScalar& x) { return x.is_exact_zero(); }
  static const PadicContext& context(const PadicScalar& x) { return x.context(); }
};

template <>
struct RingTraits<SJet> {
  static SJet embed(const SJet& like, const PadicScalar& c) { return SJet::constant(c, like.order()); }
  static SJet embed_rational(const SJet& like, const mpq_class& q) {
    return SJet::constant(from_rational(q, like.context()), like.order());
  }
  static long valuation_floor(const SJet& x) { return x.valuation_floor(); }
  static long absolute_precision(const SJet& x) { return x.absolute_precision(); }
  static bool is_exact_zero(const SJet& x) { return x.is_exact_zero(); }
  static const PadicContext& context(const SJet& x) { return x.context(); }
};

template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const PadicScalar& c, const mpq_class& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * c } -> std::convertible_to<R>;
  { a / c } -> std::convertible_to<R>;
  { RingTraits<R>::embed(a, c) } -> std::convertible_to<R>;
  { RingTraits<R>::embed_rational(a, q) } -> std::convertible_to<R>;
  { RingTraits<R>::valuation_floor(a) } -> std::convertible_to<long>;
  { RingTraits<R>::is_exact_zero(a) } -> std::convertible_to<bool>;
};

// Caps every p-adic digit count of x at n.
inline PadicScalar cap_precision(const PadicScalar& x, long n) { return with_absolute_precision(x, n); }
inline SJet cap_precision(const SJet& x, long n) {
  std::vector<PadicScalar> cs;
  cs.reserve(x.coefficients().size());
  for (const auto& c : x.coefficients()) cs.push_back(with_absolute_precision(c, n));
  return SJet(std::move(cs), x.order());
}

}  // namespace pmahler
