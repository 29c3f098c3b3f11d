#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pmahler/padic.hpp"

namespace pmahler {

/// Truncated polynomial c_0 + c_1 s + ... + c_K s^K in a formal variable s,
/// with arithmetic modulo s^(K+1).
class SJet {
 public:
  SJet(std::vector<PadicScalar> coeffs, int order);

  static SJet constant(const PadicScalar& c, int order);
  // The jet "s" itself: (0, 1, 0, ...).
  static SJet generator(const PadicContext& ctx, int order);

  int order() const { return order_; }
  const PadicContext& context() const { return ctx_; }
  const PadicScalar& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<PadicScalar>& coefficients() const { return coeffs_; }

  bool is_exact_zero() const;
  // Minimum coefficient valuation.
  long valuation_floor() const;
  // Minimum coefficient absolute precision.
  long absolute_precision() const;

  SJet operator-() const;
  friend SJet operator+(const SJet& a, const SJet& b);
  friend SJet operator-(const SJet& a, const SJet& b);
  friend SJet operator*(const SJet& a, const SJet& b);
  friend SJet operator*(const SJet& a, const PadicScalar& c);
  friend SJet operator*(const PadicScalar& c, const SJet& a) { return a * c; }
  friend SJet operator+(const SJet& a, const PadicScalar& c);
  friend SJet operator-(const SJet& a, const PadicScalar& c);
  // Coefficient-wise division by a scalar.
  friend SJet operator/(const SJet& a, const PadicScalar& c);
  SJet& operator+=(const SJet& o) { return *this = *this + o; }
  SJet& operator*=(const SJet& o) { return *this = *this * o; }

  // Requires c_0 to be a p-adic unit.
  SJet inverse() const;

  // Horner evaluation at a scalar.
  PadicScalar evaluate(const PadicScalar& s) const;

  std::string to_string() const;

 private:
  PadicContext ctx_;
  int order_;
  std::vector<PadicScalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const SJet& x);

// exp(x) for a jet with zero constant term; exact finite sum up to the order.
SJet jet_exp(const SJet& x);

}  // namespace pmahler
