#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "codefact/exppoly.hpp"

namespace codefact {

/// Finite sets of nonnegative integers, kept sorted and duplicate-free.
using IndexSet = std::vector<uint32_t>;

inline IndexSet normalized_set(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const IndexSet& s, uint32_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline ExpPoly set_poly(const IndexSet& s) { return ExpPoly::from_exponents(s); }

namespace limits {
/// Largest n accepted by the subset-division Krasner enumerator.
inline constexpr uint32_t krasner_enum_bound = 16;
}  // namespace limits

/// A pair (I,J) with a^I a^J = 1 + a + ... + a^(n-1).
struct KrasnerPair {
  IndexSet I;
  IndexSet J;
  uint32_t n = 0;

  bool operator==(const KrasnerPair&) const = default;
};

inline bool verify_krasner(const IndexSet& I, const IndexSet& J, uint32_t n) {
  if (n == 0) return false;
  return set_poly(I) * set_poly(J) == ExpPoly::geometric(n);
}

inline bool verify_krasner(const KrasnerPair& k) { return verify_krasner(k.I, k.J, k.n); }

/// (T,R) is a factorization of Z_n: every residue class mod n is t + r for
/// exactly one pair (t,r) in T x R. Elements may exceed n; only this check
/// reduces mod n.
inline bool is_factorization(const IndexSet& T, const IndexSet& R, uint32_t n) {
  if (n == 0) throw std::invalid_argument("is_factorization: n must be >= 1");
  if (T.empty() || R.empty()) return false;
  std::vector<uint32_t> hits(n, 0);
  for (uint32_t t : T) {
    for (uint32_t r : R) {
      uint32_t i = (t % n + r % n) % n;
      if (++hits[i] > 1) return false;
    }
  }
  for (uint32_t h : hits) {
    if (h != 1) return false;
  }
  return true;
}

namespace detail {

inline uint64_t set_mask(const IndexSet& s) {
  uint64_t m = 0;
  for (uint32_t x : s) m |= uint64_t{1} << x;
  return m;
}

/// Accepts candidate I iff a^I divides geometric(n) with a set quotient.
inline std::optional<IndexSet> krasner_partner(const IndexSet& I, uint32_t n) {
  auto q = exact_divide(ExpPoly::geometric(n), set_poly(I));
  if (!q || !q->is_nonneg() || !q->is_zero_one()) return std::nullopt;
  return q->support();
}

}  // namespace detail

/// All Krasner factorizations of Z_n by subset search: for each I containing
/// 0, divide geometric(n) by a^I and keep exact set quotients. Deterministic
/// order: ascending bitmask of I. Requires n <= bound.
inline std::vector<KrasnerPair> enumerate_krasner(uint32_t n,
                                                  uint32_t bound = limits::krasner_enum_bound) {
  if (n == 0) throw std::invalid_argument("enumerate_krasner: n must be >= 1");
  if (n > bound || n > 32) {
    throw std::invalid_argument("enumerate_krasner: n exceeds the enumeration bound");
  }
  std::vector<KrasnerPair> out;
  const uint64_t top = uint64_t{1} << (n - 1);
  for (uint64_t mask = 0; mask < top; ++mask) {
    IndexSet I{0};
    for (uint32_t x = 1; x < n; ++x) {
      if (mask & (uint64_t{1} << (x - 1))) I.push_back(x);
    }
    if (n % I.size() != 0) continue;
    if (auto J = detail::krasner_partner(I, n)) {
      out.push_back(KrasnerPair{std::move(I), std::move(*J), n});
    }
  }
  return out;
}

/// Fast path: builds Krasner pairs from divisor chains
/// 1 = d_0 | d_1 | ... | d_m = n by distributing the mixed-radix blocks
/// {x d_(t-1) : 0 <= x < d_t/d_(t-1)} between I and J. Must agree with
/// enumerate_krasner wherever it is used; the tests cross-check this.
inline std::vector<KrasnerPair> enumerate_krasner_chains(uint32_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_krasner_chains: n must be >= 1");
  std::vector<std::vector<uint32_t>> chains;
  std::vector<uint32_t> chain{1};
  auto extend = [&](auto&& self) -> void {
    uint32_t d = chain.back();
    if (d == n) {
      chains.push_back(chain);
      return;
    }
    for (uint32_t e = d * 2; e <= n; ++e) {
      if (e % d == 0 && n % e == 0) {
        chain.push_back(e);
        self(self);
        chain.pop_back();
      }
    }
  };
  extend(extend);

  std::set<std::pair<IndexSet, IndexSet>> seen;
  for (const auto& ch : chains) {
    const std::size_t m = ch.size() - 1;
    std::vector<ExpPoly> blocks;
    for (std::size_t t = 1; t <= m; ++t) {
      ExpPoly block;
      for (uint32_t x = 0; x < ch[t] / ch[t - 1]; ++x) {
        block += ExpPoly::monomial(x * ch[t - 1]);
      }
      blocks.push_back(block);
    }
    for (uint64_t pick = 0; pick < (uint64_t{1} << m); ++pick) {
      ExpPoly pi = ExpPoly::one();
      ExpPoly pj = ExpPoly::one();
      for (std::size_t t = 0; t < m; ++t) {
        if (pick & (uint64_t{1} << t)) {
          pi = pi * blocks[t];
        } else {
          pj = pj * blocks[t];
        }
      }
      seen.emplace(pi.support(), pj.support());
    }
  }

  std::vector<KrasnerPair> out;
  for (const auto& [I, J] : seen) out.push_back(KrasnerPair{I, J, n});
  std::sort(out.begin(), out.end(), [](const KrasnerPair& x, const KrasnerPair& y) {
    return detail::set_mask(x.I) < detail::set_mask(y.I);
  });
  return out;
}

/// Witness that (T,R) is a Hajos factorization: a Krasner pair (I,J) and
/// sets (M,L) with a^T = a^M (a-1) a^I + a^I and a^R = a^L (a-1) a^J + a^J.
struct HajosWitness {
  KrasnerPair krasner;
  IndexSet M;
  IndexSet L;
};

inline bool hajos_witness_matches(const IndexSet& T, const IndexSet& R,
                                  const HajosWitness& w) {
  if (!verify_krasner(w.krasner)) return false;
  const ExpPoly am1 = ExpPoly::a_minus_one();
  const ExpPoly ai = set_poly(w.krasner.I);
  const ExpPoly aj = set_poly(w.krasner.J);
  return set_poly(T) == set_poly(w.M) * am1 * ai + ai &&
         set_poly(R) == set_poly(w.L) * am1 * aj + aj;
}

namespace detail {

/// Solves a^X = a^M (a-1) a^Y + a^Y for the unique candidate set M; the
/// division is exact in Z[a] when a solution exists, so no subset search is
/// needed, only the max-element cap.
inline std::optional<IndexSet> hajos_component(const IndexSet& X, const IndexSet& Y,
                                               uint32_t bound) {
  ExpPoly diff = set_poly(X) - set_poly(Y);
  auto q = exact_divide(diff, ExpPoly::a_minus_one() * set_poly(Y));
  if (!q || !q->is_nonneg() || !q->is_zero_one()) return std::nullopt;
  if (auto top = q->max_exp(); top && *top > bound) return std::nullopt;
  return q->support();
}

}  // namespace detail

/// Searches for a Hajos witness for the factorization (T,R) of Z_n, with the
/// elements of M and L capped by `bound` (0 selects the default cap 2n).
/// Deterministic: the first witness in Krasner enumeration order is returned.
/// A miss means "no witness within the bound", never "not Hajos".
/// Krasner pairs come from the chain construction so that n may exceed the
/// subset-search bound; the two enumerators are cross-checked in the tests.
inline std::optional<HajosWitness> hajos_witness(const IndexSet& T, const IndexSet& R,
                                                 uint32_t n, uint32_t bound = 0) {
  if (!is_factorization(T, R, n)) {
    throw std::invalid_argument("hajos_witness: (T,R) is not a factorization of Z_n");
  }
  if (bound == 0) bound = 2 * n;
  for (const auto& k : enumerate_krasner_chains(n)) {
    auto M = detail::hajos_component(T, k.I, bound);
    if (!M) continue;
    auto L = detail::hajos_component(R, k.J, bound);
    if (!L) continue;
    return HajosWitness{k, std::move(*M), std::move(*L)};
  }
  return std::nullopt;
}

/// Every witness of (T,R), one per admitting Krasner pair, in enumeration
/// order. Same bound convention as hajos_witness.
inline std::vector<HajosWitness> hajos_witnesses_all(const IndexSet& T, const IndexSet& R,
                                                     uint32_t n, uint32_t bound = 0) {
  if (!is_factorization(T, R, n)) {
    throw std::invalid_argument("hajos_witnesses_all: (T,R) is not a factorization of Z_n");
  }
  if (bound == 0) bound = 2 * n;
  std::vector<HajosWitness> out;
  for (const auto& k : enumerate_krasner_chains(n)) {
    auto M = detail::hajos_component(T, k.I, bound);
    if (!M) continue;
    auto L = detail::hajos_component(R, k.J, bound);
    if (!L) continue;
    out.push_back(HajosWitness{k, std::move(*M), std::move(*L)});
  }
  return out;
}

/// Strong Hajos condition on a witness pair (M,L):
/// a^M (a-1) a^L + a^L >= 0 or a^M (a-1) a^L + a^M >= 0.
inline bool is_strong_hajos(const IndexSet& M, const IndexSet& L) {
  const ExpPoly base = set_poly(M) * ExpPoly::a_minus_one() * set_poly(L);
  return (base + set_poly(L)).is_nonneg() || (base + set_poly(M)).is_nonneg();
}

/// a^M (a-1) a^L + a^M + a^L, exactly.
inline ExpPoly holes_poly(const IndexSet& M, const IndexSet& L) {
  return set_poly(M) * ExpPoly::a_minus_one() * set_poly(L) + set_poly(M) + set_poly(L);
}

}  // namespace codefact
