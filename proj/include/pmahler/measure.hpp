#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "pmahler/laurent.hpp"
#include "pmahler/padic.hpp"
#include "pmahler/sjet.hpp"

namespace pmahler {

enum class Method { constant_term_engine, closed_form, finite_average };

std::string to_string(Method m);

struct MeasureResult {
  std::variant<PadicScalar, SJet> value;
  // Absolute p-adic digits the value is claimed to; the value is capped there
  // unless it is exact.
  long certified_precision = 0;
  Method method = Method::constant_term_engine;
  std::map<std::string, std::int64_t> diagnostics;

  bool is_jet() const { return std::holds_alternative<SJet>(value); }
  const PadicScalar& scalar() const { return std::get<PadicScalar>(value); }
  const SJet& jet() const { return std::get<SJet>(value); }
};

// sum_{m=1}^M (-1)^(m+1) g^m / m, with M certified so that the omitted tail
// and every dropped coefficient have valuation >= target + 1.
PadicLaurent truncated_log_series(const PadicLaurent& g, int target, long* terms = nullptr);

// m_{p,k}(f) by the constant-term algorithm.
MeasureResult higher_mahler(const PadicLaurent& f, int k);

// Z_p(s, f) for |s| <= 1.
MeasureResult zeta_mahler(const PadicLaurent& f, const PadicScalar& s);

// Z_p(X, f) mod X^(order+1); coefficient k is m_{p,k}(f) / k!.
MeasureResult zeta_mahler_jet(const PadicLaurent& f, int order);

// (1/N^n) sum over mu_N^n of log_p^k f(zeta), evaluated in Q_{p^tower_degree}.
// diagnostics["predicted_agreement"] bounds the valuation of its distance to m_{p,k}(f).
MeasureResult shnirelman_average(const PadicLaurent& f, int k, int tower_degree, long n);

// Lower bound for v(average_N - m_{p,k}(f)), capped at the target precision.
long predicted_average_agreement(const PadicLaurent& f, int k, long n);

struct RadiusBound {
  // min(v(log_p a), inf_m (m v_g - floor(log_p m))); kInfinity when both vanish.
  long c = kInfinity;
  // log_p r = C - 1/(p-1); meaningless when c is infinite.
  mpq_class log_radius;
  // C > 1/(p-1): Z_p(X, f) converges on the closed unit disc.
  bool closed_disc = false;
};

RadiusBound radius_bound(const PadicLaurent& f);

}  // namespace pmahler
