#include "pmahler/hoffman.hpp"

#include <cstdint>
#include <sstream>

namespace pmahler {

namespace {

// Products of monomials have nonnegative integer coefficients.
using IndexSum = std::map<Index, std::int64_t>;

class HarmonicMemo {
 public:
  const IndexSum& product(const Index& a, const Index& b) {
    const bool swap = b < a;
    const Index& x = swap ? b : a;
    const Index& y = swap ? a : b;
    auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IndexSum r = compute(x, y);
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  static void prepend(IndexSum& out, int k, const IndexSum& in) {
    for (const auto& [idx, c] : in) {
      Index e;
      e.reserve(idx.size() + 1);
      e.push_back(k);
      e.insert(e.end(), idx.begin(), idx.end());
      std::int64_t& slot = out[e];
      if (__builtin_add_overflow(slot, c, &slot)) throw DomainError("harmonic product coefficient overflow");
    }
  }

  IndexSum compute(const Index& a, const Index& b) {
    if (a.empty()) return {{b, 1}};
    if (b.empty()) return {{a, 1}};
    const Index v(a.begin() + 1, a.end());
    const Index w(b.begin() + 1, b.end());
    IndexSum r;
    // e_k v * e_l w = e_k (v * e_l w) + e_l (e_k v * w) + e_{k+l} (v * w)
    prepend(r, a.front(), product(v, b));
    prepend(r, b.front(), product(a, w));
    prepend(r, a.front() + b.front(), product(v, w));
    return r;
  }

  std::map<std::pair<Index, Index>, IndexSum> memo_;

 public:
  std::size_t size() const { return memo_.size(); }
  void clear() { memo_.clear(); }
};

// Shared between calls; dropped when it grows past a few hundred thousand pairs.
HarmonicMemo& shared_memo() {
  thread_local HarmonicMemo memo;
  if (memo.size() > (1u << 18)) memo.clear();
  return memo;
}

// Integer coefficients of absolute value below 2^31.
bool small_integers(const std::vector<std::pair<Index, mpq_class>>& terms) {
  for (const auto& [idx, c] : terms) {
    if (c.get_den() != 1 || abs(c.get_num()) >= (1L << 31)) return false;
  }
  return true;
}

}  // namespace

Word index_to_word(const Index& idx) {
  Word w;
  for (int k : idx) {
    if (k < 1) throw DomainError("index parts must be positive");
    w.letters.push_back(1);
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(k - 1), 0);
  }
  return w;
}

Index word_to_index(const Word& w) {
  if (!w.in_h1()) throw DomainError("word is not in H^1 (does not start with e1)");
  Index idx;
  for (unsigned char letter : w.letters) {
    if (letter == 1) {
      idx.push_back(1);
    } else {
      ++idx.back();
    }
  }
  return idx;
}

WordPoly WordPoly::one() { return monomial(Word{}); }

WordPoly WordPoly::monomial(const Index& idx, const mpq_class& c) { return monomial(index_to_word(idx), c); }

WordPoly WordPoly::monomial(const Word& w, const mpq_class& c) {
  WordPoly r;
  r.add(w, c);
  return r;
}

void WordPoly::add(const Word& w, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::vector<std::pair<Index, mpq_class>> WordPoly::index_terms() const {
  std::vector<std::pair<Index, mpq_class>> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.emplace_back(word_to_index(w), c);
  return out;
}

WordPoly operator+(const WordPoly& a, const WordPoly& b) {
  WordPoly r = a;
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

WordPoly operator-(const WordPoly& a, const WordPoly& b) { return a + b * mpq_class(-1); }

WordPoly operator*(const WordPoly& a, const mpq_class& c) {
  WordPoly r;
  for (const auto& [w, x] : a.terms_) r.add(w, x * c);
  return r;
}

WordPoly WordPoly::append(const Index& idx) const {
  const Word tail = index_to_word(idx);
  WordPoly r;
  for (const auto& [w, c] : terms_) {
    Word joined = w;
    joined.letters.insert(joined.letters.end(), tail.letters.begin(), tail.letters.end());
    r.add(joined, c);
  }
  return r;
}

std::string index_to_string(const Index& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

std::string WordPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << "*";
    if (w.in_h1()) {
      os << index_to_string(word_to_index(w));
    } else {
      for (unsigned char l : w.letters) os << (l ? "e1" : "e0");
    }
  }
  return os.str();
}

WordPoly harmonic_product(const WordPoly& v, const WordPoly& w) {
  const auto vt = v.index_terms();
  const auto wt = w.index_terms();
  HarmonicMemo& memo = shared_memo();
  WordPoly r;
  if (small_integers(vt) && small_integers(wt)) {
    IndexSum acc;
    for (const auto& [a, ca] : vt) {
      const std::int64_t ia = ca.get_num().get_si();
      for (const auto& [b, cb] : wt) {
        const std::int64_t iab = ia * cb.get_num().get_si();
        for (const auto& [idx, c] : memo.product(a, b)) {
          std::int64_t term;
          if (__builtin_mul_overflow(iab, c, &term)) throw DomainError("harmonic product coefficient overflow");
          std::int64_t& slot = acc[idx];
          if (__builtin_add_overflow(slot, term, &slot)) throw DomainError("harmonic product coefficient overflow");
        }
      }
    }
    for (const auto& [idx, c] : acc) r.add(index_to_word(idx), mpq_class(static_cast<long>(c)));
    return r;
  }
  for (const auto& [a, ca] : vt) {
    for (const auto& [b, cb] : wt) {
      for (const auto& [idx, c] : memo.product(a, b)) r.add(index_to_word(idx), ca * cb * c);
    }
  }
  return r;
}

WordPoly circled_harmonic(const WordPoly& v, const WordPoly& w) {
  const auto vt = v.index_terms();
  const auto wt = w.index_terms();
  HarmonicMemo& memo = shared_memo();
  WordPoly r;
  for (const auto& [a, ca] : vt) {
    for (const auto& [b, cb] : wt) {
      if (a.empty() || b.empty()) throw DomainError("circled harmonic product is defined on e1 H only");
      const Index va(a.begin(), a.end() - 1);
      const Index wb(b.begin(), b.end() - 1);
      for (const auto& [idx, c] : memo.product(va, wb)) {
        Index e = idx;
        e.push_back(a.back() + b.back());
        r.add(index_to_word(e), ca * cb * c);
      }
    }
  }
  return r;
}

WordPoly ones(int n) {
  if (n < 0) throw DomainError("negative repetition count");
  return WordPoly::monomial(Index(static_cast<std::size_t>(n), 1));
}

WordPoly main1_word(int i, int j) {
  if (i < 1 || j < 1) throw DomainError("main1_word needs i, j >= 1");
  return harmonic_product(ones(i - 1), ones(j - 1)).append({2});
}

}  // namespace pmahler
