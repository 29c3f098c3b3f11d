#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "pmahler/laurent.hpp"
#include "pmahler/padic.hpp"

namespace pmahler {

/// The unramified extension Q_{p^f} = Q_p[x]/(P(x)), P monic of degree f
/// and irreducible mod p. Degree 1 is Q_p itself.
class UnramifiedField {
 public:
  const PadicContext& context() const { return data_->ctx; }
  int degree() const { return data_->degree; }
  // Coefficients c_0..c_{f-1} of P = x^f + c_{f-1} x^{f-1} + ... + c_0, in [0, p).
  const std::vector<long>& defining_coefficients() const { return data_->poly; }
  // p^f.
  long residue_field_size() const { return data_->q; }

  bool operator==(const UnramifiedField& o) const { return data_ == o.data_; }

 private:
  friend UnramifiedField make_unramified(const PadicContext& ctx, int f);
  struct Data {
    PadicContext ctx;
    int degree;
    std::vector<long> poly;
    long q;
  };
  explicit UnramifiedField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

UnramifiedField make_unramified(const PadicContext& ctx, int f);

// Irreducibility of a monic polynomial over F_p, coefficients c_0..c_{f-1}.
bool is_irreducible_mod_p(const std::vector<long>& low_coeffs, long p);

/// Element sum_i c_i x^i of an unramified extension.
class ExtScalar {
 public:
  ExtScalar(UnramifiedField field, std::vector<PadicScalar> coeffs);
  static ExtScalar embed(const UnramifiedField& field, const PadicScalar& c);

  const UnramifiedField& field() const { return field_; }
  const std::vector<PadicScalar>& coefficients() const { return coeffs_; }
  const PadicScalar& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  // Unramified: the Gauss valuation of the coefficients.
  long valuation() const;
  long absolute_precision() const;
  bool is_zero() const;

  ExtScalar operator-() const;
  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator*(const ExtScalar& a, const PadicScalar& c);
  friend ExtScalar operator/(const ExtScalar& a, const PadicScalar& c);
  ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
  ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }

  ExtScalar inverse() const;

  std::string to_string() const;

 private:
  UnramifiedField field_;
  std::vector<PadicScalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& x);

ExtScalar pow(const ExtScalar& x, long n);
long agreement(const ExtScalar& a, const ExtScalar& b);

// log_p with log_p p = 0, computed as log_p(u^(q-1)) / (q-1) for the unit part u.
ExtScalar ext_log(const ExtScalar& x);

// The N-th roots of unity (Teichmueller lifts), in the order zeta^0, ..., zeta^(N-1).
std::vector<ExtScalar> roots_of_unity(const UnramifiedField& field, long n);

ExtScalar eval_laurent(const PadicLaurent& f, const std::vector<ExtScalar>& point);

}  // namespace pmahler
