#include "pmahler/sjet.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pmahler {

SJet::SJet(std::vector<PadicScalar> coeffs, int order)
    : ctx_([&]() -> PadicContext {
        for (const auto& c : coeffs) {
          if (c.has_context()) return c.context();
        }
        throw DomainError("jet needs at least one coefficient bound to a context");
      }()),
      order_(order),
      coeffs_(std::move(coeffs)) {
  if (order < 0) throw DomainError("jet order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, PadicScalar::zero(ctx_));
  for (auto& c : coeffs_) {
    if (!c.has_context()) c = PadicScalar::zero(ctx_);
  }
}

SJet SJet::constant(const PadicScalar& c, int order) { return SJet({c}, order); }

SJet SJet::generator(const PadicContext& ctx, int order) {
  if (order == 0) return SJet({PadicScalar::zero(ctx)}, 0);
  return SJet({PadicScalar::zero(ctx), PadicScalar::one(ctx)}, order);
}

bool SJet::is_exact_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicScalar& c) { return c.is_exact_zero(); });
}

long SJet::valuation_floor() const {
  long v = kInfinity;
  for (const auto& c : coeffs_) v = std::min(v, c.valuation());
  return v;
}

long SJet::absolute_precision() const {
  long a = kInfinity;
  for (const auto& c : coeffs_) a = std::min(a, c.absolute_precision());
  return a;
}

SJet SJet::operator-() const {
  SJet r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
void check_orders(const SJet& a, const SJet& b) {
  if (a.order() != b.order()) throw DomainError("jets of different truncation orders");
}
}  // namespace

SJet operator+(const SJet& a, const SJet& b) {
  check_orders(a, b);
  SJet r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

SJet operator-(const SJet& a, const SJet& b) { return a + (-b); }

SJet operator*(const SJet& a, const SJet& b) {
  check_orders(a, b);
  std::vector<PadicScalar> out(a.coeffs_.size(), PadicScalar::zero(a.ctx_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return SJet(std::move(out), a.order_);
}

SJet operator*(const SJet& a, const PadicScalar& c) {
  SJet r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

SJet operator+(const SJet& a, const PadicScalar& c) {
  SJet r = a;
  r.coeffs_[0] += c;
  return r;
}

SJet operator-(const SJet& a, const PadicScalar& c) { return a + (-c); }

SJet operator/(const SJet& a, const PadicScalar& c) {
  SJet r = a;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

SJet SJet::inverse() const {
  const PadicScalar& c0 = coeffs_[0];
  if (c0.is_zero() || c0.valuation() != 0) throw DomainError("jet inverse needs a unit constant term");
  // b_0 = 1/c_0, b_k = -(sum_{i=1..k} c_i b_{k-i}) / c_0
  const PadicScalar inv0 = c0.inverse();
  std::vector<PadicScalar> b(coeffs_.size(), PadicScalar::zero(ctx_));
  b[0] = inv0;
  for (std::size_t k = 1; k < b.size(); ++k) {
    PadicScalar acc = PadicScalar::zero(ctx_);
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * b[k - i];
    b[k] = -(acc * inv0);
  }
  return SJet(std::move(b), order_);
}

PadicScalar SJet::evaluate(const PadicScalar& s) const {
  PadicScalar acc = PadicScalar::zero(ctx_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::string SJet::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coeffs_[i].to_string();
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SJet& x) { return os << x.to_string(); }

SJet jet_exp(const SJet& x) {
  if (!x.coefficient(0).is_exact_zero()) throw DomainError("jet_exp needs a zero constant term");
  const PadicContext& ctx = x.context();
  SJet sum = SJet::constant(PadicScalar::one(ctx), x.order());
  SJet term = sum;
  for (int j = 1; j <= x.order(); ++j) {
    term = term * x / PadicScalar::from_integer(j, ctx);
    sum += term;
  }
  return sum;
}

}  // namespace pmahler
