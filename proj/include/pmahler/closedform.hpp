#pragma once

#include "pmahler/padic.hpp"
#include "pmahler/sjet.hpp"

namespace pmahler {

// Closed forms for f = (t - alpha)(t - beta) with v(beta) >= 1, v(alpha) <= -1.

// log_p^k a + sum_{i,j>=1, i+j<=k} (-1)^(i+j) k!/(k-i-j)! log_p^(k-i-j) a Li_{(1^(i-1) * 1^(j-1), 2)}(beta/alpha)
PadicScalar main1_rhs(const PadicScalar& alpha, const PadicScalar& beta, int k);

// <alpha>^s 2F1(-s, -s; 1; beta/alpha)
PadicScalar main2_rhs(const PadicScalar& alpha, const PadicScalar& beta, const PadicScalar& s);
SJet main2_rhs(const PadicScalar& alpha, const PadicScalar& beta, const SJet& s);

// Closed forms for f = t1 + 1/t1 + t2 + 1/t2 + c with v(c) <= -1.

// <c>^s 3F2(1/2, -s/2, (1-s)/2; 1, 1; 16/c^2)
PadicScalar main3_rhs(const PadicScalar& c, const PadicScalar& s);
SJet main3_rhs(const PadicScalar& c, const SJet& s);

// log_p c - (2/c^2) 4F3(3/2, 3/2, 1, 1; 2, 2, 2; 16/c^2)
PadicScalar rv_rhs(const PadicScalar& c);

}  // namespace pmahler
