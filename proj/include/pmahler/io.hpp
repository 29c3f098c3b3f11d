#pragma once

#include <string>

#include "pmahler/hoffman.hpp"
#include "pmahler/laurent.hpp"
#include "pmahler/measure.hpp"
#include "pmahler/padic.hpp"

namespace pmahler {

// Accepts "<int>", "<int>/<int>", "p^<v>*<int>" (p literal or the prime
// numeral, "*<int>" optional) and the display expansion produced by
// PadicScalar::to_string, e.g. "3*5^-1 + 2 + O(5^4)". Throws ParseError.
PadicScalar parse_padic_literal(const std::string& text, const PadicContext& ctx);

// {"vars": n, "terms": [{"coeff": "<literal>", "exp": [e1, ..., en]}, ...]}.
// Text starting with '@' names a file holding the JSON.
PadicLaurent parse_polynomial(const std::string& text, const PadicContext& ctx);

std::string polynomial_to_json(const PadicLaurent& f);

// "(1,2)", "1,2" or "2".
Index parse_index(const std::string& text);

// {"value": ..., "precision": N, "method": ..., "diagnostics": {...}}; jets add
// "measures" with k! * coefficient_k.
std::string result_to_json(const MeasureResult& r);

}  // namespace pmahler
