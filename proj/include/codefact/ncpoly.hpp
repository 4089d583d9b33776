#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "codefact/exppoly.hpp"
#include "codefact/integers.hpp"
#include "codefact/word.hpp"

namespace codefact {

/// Sparse noncommutative polynomial in Z<a,b>: a finite map from words to
/// nonzero integer coefficients, kept canonical (zero coefficients are never
/// stored) and iterated in the canonical word order.
class NcPoly {
public:
  using TermMap = std::map<Word, Int>;

  NcPoly() = default;

  static NcPoly zero() { return NcPoly(); }
  static NcPoly one() { return monomial(Word()); }
  static NcPoly letter_a() { return monomial(Word::a_power(1)); }
  static NcPoly letter_b() { return monomial(Word::b()); }

  /// a + b - 1, the polynomial A-1 of the two-letter alphabet.
  static NcPoly alphabet_minus_one() {
    NcPoly p = letter_a() + letter_b();
    p.add_term(Word(), -1);
    return p;
  }

  static NcPoly monomial(Word w, Int c = 1) {
    NcPoly p;
    if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool contains(const Word& w) const { return terms_.count(w) > 0; }

  std::vector<Word> support() const {
    std::vector<Word> s;
    s.reserve(terms_.size());
    for (const auto& [w, c] : terms_) s.push_back(w);
    return s;
  }

  /// Largest b-count over the support; 0 for the zero polynomial.
  std::size_t max_b_count() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) {
      if (w.b_count() > m) m = w.b_count();
    }
    return m;
  }

  /// P_g: the part of P supported on words with exactly g occurrences of b.
  NcPoly b_layer(std::size_t g) const {
    NcPoly p;
    for (const auto& [w, c] : terms_) {
      if (w.b_count() == g) p.terms_.emplace(w, c);
    }
    return p;
  }

  /// P~ with (P~, w~) = (P, w); an anti-homomorphism of the ring.
  NcPoly reversed() const {
    NcPoly p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w.reversed(), c);
    return p;
  }

  bool is_nonneg() const {
    for (const auto& [w, c] : terms_) {
      if (c < 0) return false;
    }
    return true;
  }

  /// True iff every coefficient is 0 or 1, i.e. P is the characteristic
  /// polynomial of its support.
  bool is_characteristic() const {
    for (const auto& [w, c] : terms_) {
      if (c != 1) return false;
    }
    return true;
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  friend NcPoly operator+(NcPoly l, const NcPoly& r) { return l += r; }
  friend NcPoly operator-(NcPoly l, const NcPoly& r) { return l -= r; }

  NcPoly operator-() const {
    NcPoly p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
  }

  friend NcPoly operator*(const NcPoly& l, const NcPoly& r) {
    NcPoly p;
    for (const auto& [w1, c1] : l.terms_) {
      for (const auto& [w2, c2] : r.terms_) {
        p.add_term(w1.concat(w2), c1 * c2);
      }
    }
    return p;
  }

  friend NcPoly operator*(const Int& k, const NcPoly& r) {
    NcPoly p;
    if (k == 0) return p;
    for (const auto& [w, c] : r.terms_) p.terms_.emplace(w, k * c);
    return p;
  }

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

private:
  void add_term(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// Embeds a^H into Z<a,b> as a sum of a-powers.
inline NcPoly to_ncpoly(const ExpPoly& p) {
  NcPoly q;
  for (const auto& [e, c] : p.coeffs()) q += NcPoly::monomial(Word::a_power(e), c);
  return q;
}

/// Inverse of the embedding; rejects polynomials that mention b.
inline ExpPoly to_exppoly(const NcPoly& p) {
  ExpPoly q;
  for (const auto& [w, c] : p.terms()) {
    if (!w.is_a_power()) throw std::invalid_argument("to_exppoly: word contains b: " + w.str());
    q += ExpPoly::monomial(w.first_run(), c);
  }
  return q;
}

}  // namespace codefact
