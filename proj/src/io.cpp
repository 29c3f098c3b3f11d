#include "pmahler/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace pmahler {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

mpz_class parse_integer(const std::string& s, const std::string& whole) {
  static const std::regex integer(R"([+-]?\d+)");
  if (!std::regex_match(s, integer)) throw ParseError("malformed p-adic literal '" + whole + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

long parse_exponent(const std::string& s, const std::string& whole) {
  const mpz_class e = parse_integer(s, whole);
  if (!e.fits_slong_p() || abs(e) > 1000000) throw ParseError("exponent out of range in '" + whole + "'");
  return e.get_si();
}

// "p" or the prime written out.
std::string prime_pattern(const PadicContext& ctx) { return "(?:p|" + std::to_string(ctx.prime()) + ")"; }

PadicScalar parse_expansion(const std::string& text, const PadicContext& ctx) {
  const std::string P = prime_pattern(ctx);
  const std::regex big_oh("O\\(" + P + "\\^([+-]?\\d+)\\)");
  const std::regex power("(?:([+-]?\\d+)\\*)?" + P + "(?:\\^([+-]?\\d+))?");
  PadicScalar sum = PadicScalar::zero(ctx);
  long cap = kInfinity;
  std::stringstream ss(text);
  std::string piece;
  bool any = false;
  while (std::getline(ss, piece, '+')) {
    const std::string term = trim(piece);
    if (term.empty()) throw ParseError("malformed p-adic expansion '" + text + "'");
    any = true;
    std::smatch m;
    if (std::regex_match(term, m, big_oh)) {
      cap = std::min(cap, parse_exponent(m[1], text));
    } else if (std::regex_match(term, m, power)) {
      const mpz_class digit = m[1].matched ? parse_integer(m[1], text) : mpz_class(1);
      const long e = m[2].matched ? parse_exponent(m[2], text) : 1;
      sum += PadicScalar::from_integer(digit, ctx) * pow(PadicScalar::from_integer(ctx.prime(), ctx), e);
    } else {
      sum += PadicScalar::from_integer(parse_integer(term, text), ctx);
    }
  }
  if (!any) throw ParseError("empty p-adic literal");
  if (cap == kInfinity) return sum;
  if (sum.is_exact_zero()) return PadicScalar::big_oh(cap, ctx);
  return with_absolute_precision(sum, cap);
}

std::string read_source(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw ParseError("cannot read polynomial file '" + text.substr(1) + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json scalar_json(const PadicScalar& x) { return x.to_string(); }

}  // namespace

PadicScalar parse_padic_literal(const std::string& raw, const PadicContext& ctx) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty p-adic literal");
  if (text.find("O(") != std::string::npos || text.find(" + ") != std::string::npos) return parse_expansion(text, ctx);

  std::smatch m;
  static const std::regex fraction(R"(([+-]?\d+)\s*/\s*([+-]?\d+))");
  if (std::regex_match(text, m, fraction)) {
    const mpz_class den = parse_integer(m[2], text);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return from_rational(parse_integer(m[1], text), den, ctx);
  }
  const std::regex scaled("([+-]?)" + prime_pattern(ctx) + "\\^([+-]?\\d+)(?:\\s*\\*\\s*([+-]?\\d+))?");
  if (std::regex_match(text, m, scaled)) {
    mpz_class unit = m[3].matched ? parse_integer(m[3], text) : mpz_class(1);
    if (m[1] == "-") unit = -unit;
    return PadicScalar::from_integer(unit, ctx) * pow(PadicScalar::from_integer(ctx.prime(), ctx), parse_exponent(m[2], text));
  }
  static const std::regex integer(R"([+-]?\d+)");
  if (std::regex_match(text, integer)) return PadicScalar::from_integer(parse_integer(text, text), ctx);
  return parse_expansion(text, ctx);
}

PadicLaurent parse_polynomial(const std::string& raw, const PadicContext& ctx) {
  json doc;
  try {
    doc = json::parse(read_source(raw));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("terms")) {
    throw ParseError("polynomial JSON needs \"vars\" and \"terms\"");
  }
  if (!doc["vars"].is_number_integer() || doc["vars"].get<long>() < 1) {
    throw ParseError("\"vars\" must be a positive integer");
  }
  const int n = doc["vars"].get<int>();
  if (!doc["terms"].is_array()) throw ParseError("\"terms\" must be an array");
  PadicLaurent f(n, PadicScalar::zero(ctx));
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exp")) {
      throw ParseError("each term needs \"coeff\" and \"exp\"");
    }
    const auto& c = term["coeff"];
    PadicScalar coeff;
    if (c.is_string()) {
      coeff = parse_padic_literal(c.get<std::string>(), ctx);
    } else if (c.is_number_integer()) {
      coeff = PadicScalar::from_integer(c.get<long>(), ctx);
    } else {
      throw ParseError("\"coeff\" must be a p-adic literal string or an integer");
    }
    const auto& e = term["exp"];
    if (!e.is_array() || static_cast<int>(e.size()) != n) {
      throw ParseError("\"exp\" must be an array of " + std::to_string(n) + " integers");
    }
    Exponent exp;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw ParseError("exponents must be integers");
      exp.push_back(x.get<int>());
    }
    f.add_term(exp, coeff);
  }
  return f;
}

std::string polynomial_to_json(const PadicLaurent& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"coeff", c.is_exact() ? lift_to_rational(c).get_str() : c.to_string()}, {"exp", e}});
  }
  return json{{"vars", f.n_vars()}, {"terms", terms}}.dump();
}

Index parse_index(const std::string& raw) {
  std::string text = trim(raw);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("malformed index '" + raw + "'");
    text = text.substr(1, text.size() - 2);
  }
  Index idx;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const std::string t = trim(part);
    static const std::regex positive(R"(\d+)");
    if (!std::regex_match(t, positive) || std::stol(t) < 1 || std::stol(t) > 1000) {
      throw ParseError("index parts must be positive integers: '" + raw + "'");
    }
    idx.push_back(std::stoi(t));
  }
  return idx;
}

std::string result_to_json(const MeasureResult& r) {
  json out;
  if (r.is_jet()) {
    json coeffs = json::array();
    json measures = json::array();
    mpz_class factorial = 1;
    const SJet& jet = r.jet();
    for (int k = 0; k <= jet.order(); ++k) {
      if (k > 0) factorial *= k;
      coeffs.push_back(scalar_json(jet.coefficient(k)));
      measures.push_back(scalar_json(jet.coefficient(k) * PadicScalar::from_integer(factorial, jet.context())));
    }
    out["value"] = coeffs;
    out["measures"] = measures;
  } else {
    out["value"] = scalar_json(r.scalar());
  }
  out["precision"] = r.certified_precision;
  out["method"] = to_string(r.method);
  out["diagnostics"] = r.diagnostics;
  return out.dump();
}

}  // namespace pmahler
