#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pmahler/errors.hpp"

namespace pmahler {

// (k_1, ..., k_r), all k_i >= 1; the empty index is the unit 1.
using Index = std::vector<int>;

/// Word over the letters e0 (0) and e1 (1).
struct Word {
  std::vector<unsigned char> letters;

  bool empty() const { return letters.empty(); }
  // Empty or starting with e1.
  bool in_h1() const { return letters.empty() || letters.front() == 1; }
  // Empty, or starting with e1 and ending with e0.
  bool in_h0() const { return letters.empty() || (letters.front() == 1 && letters.back() == 0); }

  auto operator<=>(const Word&) const = default;
};

// e_k = e1 e0^(k-1).
Word index_to_word(const Index& idx);
Index word_to_index(const Word& w);

/// Finite Q-linear combination of words.
class WordPoly {
 public:
  using TermMap = std::map<Word, mpq_class>;

  WordPoly() = default;
  static WordPoly one();
  static WordPoly monomial(const Index& idx, const mpq_class& c = 1);
  static WordPoly monomial(const Word& w, const mpq_class& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const mpq_class& c);

  // Terms as indices; throws DomainError if some word is not in H^1.
  std::vector<std::pair<Index, mpq_class>> index_terms() const;

  friend WordPoly operator+(const WordPoly& a, const WordPoly& b);
  friend WordPoly operator-(const WordPoly& a, const WordPoly& b);
  friend WordPoly operator*(const WordPoly& a, const mpq_class& c);
  friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.terms_ == b.terms_; }

  // Right multiplication by the word of idx.
  WordPoly append(const Index& idx) const;

  // "(2,2) + 2*(1,1,2)" (words in lexicographic order); "0" for the zero polynomial, "()" for the unit.
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::string index_to_string(const Index& idx);

WordPoly harmonic_product(const WordPoly& v, const WordPoly& w);
WordPoly circled_harmonic(const WordPoly& v, const WordPoly& w);

// e1^n.
WordPoly ones(int n);

// (e1^(i-1) * e1^(j-1)) e2.
WordPoly main1_word(int i, int j);

}  // namespace pmahler
