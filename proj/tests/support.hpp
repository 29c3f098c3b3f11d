#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/padic.hpp"

namespace testing {

using Term = std::pair<pmahler::Exponent, mpq_class>;

inline pmahler::PadicLaurent poly(const pmahler::PadicContext& ctx, int vars, const std::vector<Term>& terms) {
  pmahler::PadicLaurent f(vars, pmahler::PadicScalar::zero(ctx));
  for (const auto& [e, c] : terms) f.add_term(e, pmahler::from_rational(c, ctx));
  return f;
}

inline mpq_class q(long num, long den = 1) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// (t - alpha)(t - beta)
inline pmahler::PadicLaurent quadratic(const pmahler::PadicContext& ctx, const mpq_class& alpha, const mpq_class& beta) {
  return poly(ctx, 1, {{{2}, 1}, {{1}, -(alpha + beta)}, {{0}, alpha * beta}});
}

// t1 + 1/t1 + t2 + 1/t2 + c
inline pmahler::PadicLaurent torus_quartic(const pmahler::PadicContext& ctx, const mpq_class& c) {
  return poly(ctx, 2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{0, 0}, c}});
}

}  // namespace testing
