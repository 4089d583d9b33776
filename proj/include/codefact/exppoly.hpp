#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "codefact/integers.hpp"

namespace codefact {

/// Univariate polynomial in Z[a] kept in exponent-multiset form: a finite
/// map exponent -> nonzero integer multiplicity. A finite multiset H of
/// nonnegative integers is identified with the polynomial a^H, so a^{} = 0
/// and a^0 = 1, and the multiset rules a^(M+L) = a^M a^L and
/// a^(M u L) = a^M + a^L are ordinary ring operations here.
class ExpPoly {
public:
  using CoeffMap = std::map<uint32_t, Int>;

  ExpPoly() = default;

  static ExpPoly zero() { return ExpPoly(); }
  static ExpPoly one() { return monomial(0); }

  static ExpPoly monomial(uint32_t e, Int c = 1) {
    ExpPoly p;
    if (c != 0) p.coeffs_[e] = std::move(c);
    return p;
  }

  /// a^H for a multiset given by its element list (repeats add up).
  static ExpPoly from_exponents(const std::vector<uint32_t>& exps) {
    ExpPoly p;
    for (uint32_t e : exps) p.coeffs_[e] += 1;
    return p;
  }

  static ExpPoly a_minus_one() {
    ExpPoly p;
    p.coeffs_[0] = -1;
    p.coeffs_[1] = 1;
    return p;
  }

  /// 1 + a + ... + a^(n-1) = (a^n - 1)/(a - 1). Requires n >= 1.
  static ExpPoly geometric(uint32_t n) {
    if (n == 0) throw std::invalid_argument("geometric: n must be >= 1");
    ExpPoly p;
    for (uint32_t e = 0; e < n; ++e) p.coeffs_[e] = 1;
    return p;
  }

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coeff(uint32_t e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  bool is_nonneg() const {
    for (const auto& [e, c] : coeffs_) {
      if (c < 0) return false;
    }
    return true;
  }

  /// True iff every coefficient is 0 or 1, i.e. the multiset is a plain set.
  bool is_zero_one() const {
    for (const auto& [e, c] : coeffs_) {
      if (c != 1) return false;
    }
    return true;
  }

  std::vector<uint32_t> support() const {
    std::vector<uint32_t> s;
    s.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) s.push_back(e);
    return s;
  }

  std::optional<uint32_t> min_exp() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }
  std::optional<uint32_t> max_exp() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }

  ExpPoly& operator+=(const ExpPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend ExpPoly operator+(ExpPoly l, const ExpPoly& r) { return l += r; }
  friend ExpPoly operator-(ExpPoly l, const ExpPoly& r) { return l -= r; }

  ExpPoly operator-() const {
    ExpPoly p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
    return p;
  }

  friend ExpPoly operator*(const ExpPoly& l, const ExpPoly& r) {
    ExpPoly p;
    for (const auto& [e1, c1] : l.coeffs_) {
      for (const auto& [e2, c2] : r.coeffs_) {
        p.add_term(e1 + e2, c1 * c2);
      }
    }
    return p;
  }

  friend ExpPoly operator*(const Int& k, const ExpPoly& r) {
    ExpPoly p;
    if (k == 0) return p;
    for (const auto& [e, c] : r.coeffs_) p.coeffs_[e] = k * c;
    return p;
  }

  /// Multiplication by a^s.
  ExpPoly shifted(uint32_t s) const {
    ExpPoly p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[e + s] = c;
    return p;
  }

  bool operator==(const ExpPoly& o) const { return coeffs_ == o.coeffs_; }

private:
  void add_term(uint32_t e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  CoeffMap coeffs_;
};

/// [H]_t: the sub-multiset of H whose exponents are congruent to t mod n,
/// multiplicities preserved. Requires 0 <= t < n.
inline ExpPoly residue_filter(const ExpPoly& H, uint32_t t, uint32_t n) {
  if (n == 0) throw std::invalid_argument("residue_filter: n must be >= 1");
  if (t >= n) throw std::invalid_argument("residue_filter: residue out of range");
  ExpPoly p;
  for (const auto& [e, c] : H.coeffs()) {
    if (e % n == t) p += ExpPoly::monomial(e, c);
  }
  return p;
}

/// a^L (a-1) a^J - a^L' (a-1) a^J + k a^J >= 0, checked coefficientwise.
/// L, Lp and J must be nonnegative polynomials and k >= 0.
inline bool telescoped_ineq(const ExpPoly& L, const ExpPoly& Lp, const Int& k,
                            const ExpPoly& J) {
  if (!L.is_nonneg() || !Lp.is_nonneg() || !J.is_nonneg() || k < 0) {
    throw std::invalid_argument("telescoped_ineq: arguments must be nonnegative");
  }
  ExpPoly v = (L - Lp) * ExpPoly::a_minus_one() * J + k * J;
  return v.is_nonneg();
}

/// Exact division in Z[a]: returns f/g when g divides f, nothing otherwise.
/// Requires g != 0. Works from the lowest exponent upward.
inline std::optional<ExpPoly> exact_divide(const ExpPoly& f, const ExpPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (f.is_zero()) return ExpPoly::zero();
  const uint32_t glow = *g.min_exp();
  const Int glow_c = g.coeff(glow);
  const uint32_t fdeg = *f.max_exp();
  const uint32_t gdeg = *g.max_exp();
  if (gdeg > fdeg) return std::nullopt;
  const uint32_t qdeg_bound = fdeg - gdeg + glow;

  ExpPoly rem = f;
  ExpPoly q;
  while (!rem.is_zero()) {
    const uint32_t e = *rem.min_exp();
    if (e < glow || e - glow > qdeg_bound) return std::nullopt;
    const Int c = rem.coeff(e);
    if (c % glow_c != 0) return std::nullopt;
    ExpPoly term = ExpPoly::monomial(e - glow, c / glow_c);
    q += term;
    rem -= term * g;
  }
  return q;
}

/// The constant k_i from the layer inequality: given a^I, an index i and the
/// polynomials a^(M_j) for j in J, returns
///   k_i = (a^I, a^i) + max({0} u { (a^I (a-1) a^(M_j), a^i) : value >= 0 }).
inline Int l2_constant(const ExpPoly& I, uint32_t i,
                       const std::map<uint32_t, ExpPoly>& M) {
  Int best = 0;
  const ExpPoly base = I * ExpPoly::a_minus_one();
  for (const auto& [j, Mj] : M) {
    Int gamma = (base * Mj).coeff(i);
    if (gamma >= 0 && gamma > best) best = gamma;
  }
  return I.coeff(i) + best;
}

}  // namespace codefact
