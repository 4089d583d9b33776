#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "codefact/codes.hpp"
#include "codefact/cyclic.hpp"
#include "codefact/errors.hpp"
#include "codefact/ncpoly.hpp"

namespace codefact {

/// A candidate factorization (P,S), meant to satisfy C = P(A-1)S + 1 for the
/// characteristic polynomial C of a finite maximal code.
struct FactorizationPair {
  NcPoly P;
  NcPoly S;

  bool operator==(const FactorizationPair&) const = default;
};

/// The b-layers of P(A-1)S + 1: entry r holds the part supported on words
/// with exactly r occurrences of b, computed by the layered recurrence
///   C_0     = P_0 (a-1) S_0 + 1
///   C_(r+1) = sum_{i+j=r} P_i b S_j + sum_{i+j=r+1} P_i (a-1) S_j
/// and cross-checked against the direct product.
inline std::vector<NcPoly> layer_decompose(const FactorizationPair& f) {
  const std::size_t k = f.P.max_b_count();
  const std::size_t h = f.S.max_b_count();
  std::vector<NcPoly> pl, sl;
  for (std::size_t i = 0; i <= k; ++i) pl.push_back(f.P.b_layer(i));
  for (std::size_t j = 0; j <= h; ++j) sl.push_back(f.S.b_layer(j));

  const NcPoly am1 = to_ncpoly(ExpPoly::a_minus_one());
  const NcPoly b = NcPoly::letter_b();

  std::vector<NcPoly> layers(k + h + 2);
  layers[0] = pl[0] * am1 * sl[0] + NcPoly::one();
  for (std::size_t r = 0; r <= k + h; ++r) {
    NcPoly c;
    for (std::size_t i = 0; i <= std::min(r, k); ++i) {
      const std::size_t j = r - i;
      if (j <= h) c += pl[i] * b * sl[j];
    }
    for (std::size_t i = 0; i <= std::min(r + 1, k); ++i) {
      const std::size_t j = r + 1 - i;
      if (j <= h) c += pl[i] * am1 * sl[j];
    }
    layers[r + 1] = std::move(c);
  }

  NcPoly total;
  for (const NcPoly& c : layers) total += c;
  if (total != f.P * NcPoly::alphabet_minus_one() * f.S + NcPoly::one()) {
    throw std::logic_error("layer_decompose: layer sum mismatch");
  }
  return layers;
}

/// True iff P(A-1)S + 1 equals the characteristic polynomial of C exactly.
inline bool verify_factorization(const CodeSpec& code, const FactorizationPair& f) {
  return f.P * NcPoly::alphabet_minus_one() * f.S + NcPoly::one() == char_poly(code);
}

/// (P,S) is positive when P,S or -P,-S are characteristic polynomials.
inline bool is_positive(const FactorizationPair& f) {
  if (f.P.is_characteristic() && f.S.is_characteristic()) return true;
  return (-f.P).is_characteristic() && (-f.S).is_characteristic();
}

/// If wba^j lies in supp(S), then a^j must lie in supp(S) as well.
inline bool check_s_closure(const NcPoly& S) {
  for (const auto& [w, c] : S.terms()) {
    if (w.b_count() == 0) continue;
    if (!S.contains(Word::a_power(w.last_run()))) return false;
  }
  return true;
}

/// Sign normalization report: the sign making both top layers characteristic,
/// and which of the two structural shapes the top layers take. Both shape
/// flags are reported when both hold; callers that need a single case pick
/// the S-side first.
struct T2Report {
  int sign = +1;
  bool p_side = false;  // P_k = sum over p in supp(P_(k-1)) of p b a^(L_p)
  bool s_side = false;  // S_h = sum over s in supp(S_(h-1)) of a^(M_s) b s
  std::map<Word, IndexSet> p_sets;  // L_p
  std::map<Word, IndexSet> s_sets;  // M_s
};

inline T2Report t2_normalize(const FactorizationPair& f) {
  for (int sign : {+1, -1}) {
    const NcPoly p = sign > 0 ? f.P : -f.P;
    const NcPoly s = sign > 0 ? f.S : -f.S;
    const std::size_t k = p.max_b_count();
    const std::size_t h = s.max_b_count();
    if (!p.b_layer(k).is_characteristic() || !s.b_layer(h).is_characteristic()) continue;

    T2Report rep;
    rep.sign = sign;
    if (k >= 1) {
      const NcPoly below = p.b_layer(k - 1);
      if (!below.is_zero() && below.is_nonneg()) {
        bool ok = true;
        std::map<Word, IndexSet> sets;
        const NcPoly top = p.b_layer(k);
        for (const auto& [w, c] : top.terms()) {
          auto [prefix, l] = w.split_last_b();
          if (!below.contains(prefix)) {
            ok = false;
            break;
          }
          sets[prefix].push_back(l);
        }
        if (ok) {
          rep.p_side = true;
          rep.p_sets = std::move(sets);
        }
      }
    }
    if (h >= 1) {
      const NcPoly below = s.b_layer(h - 1);
      if (!below.is_zero() && below.is_nonneg()) {
        bool ok = true;
        std::map<Word, IndexSet> sets;
        const NcPoly top = s.b_layer(h);
        for (const auto& [w, c] : top.terms()) {
          auto [m, suffix] = w.split_first_b();
          if (!below.contains(suffix)) {
            ok = false;
            break;
          }
          sets[suffix].push_back(m);
        }
        if (ok) {
          rep.s_side = true;
          rep.s_sets = std::move(sets);
        }
      }
    }
    return rep;
  }
  throw verify_error("T2Violation",
                     "no sign makes the top layers of P and S characteristic; "
                     "the pair cannot factorize a finite maximal code");
}

/// Structural parameters extracted from a positive 4-code factorization.
struct M0Params {
  int case_id = 0;  // 1, 2 or 3
  KrasnerPair krasner;                                    // cases 2 and 3
  IndexSet Iprime;                                        // cases 2 and 3
  std::map<uint32_t, IndexSet> L;                         // L_i, i in I'
  IndexSet Jprime;                                        // case 3 (case 2: equals J)
  std::map<uint32_t, IndexSet> M;                         // M_j
  std::map<Word, IndexSet> Lw;                            // case 2: w in X_1 -> L_w
  std::map<std::pair<uint32_t, uint32_t>, IndexSet> L2;   // case 3: (i,l) -> L_(i,l)
};

struct ClassifyReport {
  bool swapped = false;  // analysis ran on (S~, P~) instead of (P, S)
  int l0_case = 0;       // (1): P has layers 0..3, S = S_0; (2): layers 0..2 and 0..1
  int sign = +1;
  std::optional<M0Params> m0;
};

namespace detail {

/// Reads n with C_0 = a^n from the bottom layers and checks (I,J) Krasner.
inline std::optional<KrasnerPair> bottom_krasner(const NcPoly& p0, const NcPoly& s0) {
  if (p0.is_zero() || s0.is_zero()) return std::nullopt;
  const NcPoly c0 = p0 * to_ncpoly(ExpPoly::a_minus_one()) * s0 + NcPoly::one();
  if (c0.term_count() != 1) return std::nullopt;
  const auto& [w, c] = *c0.terms().begin();
  if (c != 1 || !w.is_a_power() || w.first_run() == 0) return std::nullopt;
  KrasnerPair k{to_exppoly(p0).support(), to_exppoly(s0).support(), w.first_run()};
  if (!verify_krasner(k)) return std::nullopt;
  return k;
}

inline std::optional<M0Params> extract_m0_case3(const NcPoly& p, const NcPoly& s) {
  auto krasner = bottom_krasner(p.b_layer(0), s.b_layer(0));
  if (!krasner) return std::nullopt;
  M0Params m;
  m.case_id = 3;
  m.krasner = *krasner;
  const NcPoly p1 = p.b_layer(1), p2 = p.b_layer(2), s1 = s.b_layer(1);
  for (const auto& [w, c] : p1.terms()) {
    m.L[w.first_run()].push_back(w.last_run());
  }
  for (const auto& [i, li] : m.L) m.Iprime.push_back(i);
  for (const auto& [w, c] : p2.terms()) {
    const auto& runs = w.runs();
    const uint32_t i = runs[0], l = runs[1];
    auto it = m.L.find(i);
    if (it == m.L.end() || !set_contains(it->second, l)) return std::nullopt;
    m.L2[{i, l}].push_back(runs[2]);
  }
  for (const auto& [w, c] : s1.terms()) {
    m.M[w.last_run()].push_back(w.first_run());
  }
  for (const auto& [j, mj] : m.M) m.Jprime.push_back(j);
  return m;
}

inline std::optional<M0Params> extract_m0_case2(const NcPoly& p, const NcPoly& s) {
  auto krasner = bottom_krasner(p.b_layer(0), s.b_layer(0));
  if (!krasner) return std::nullopt;
  M0Params m;
  m.case_id = 2;
  m.krasner = *krasner;
  const NcPoly p1 = p.b_layer(1), p2 = p.b_layer(2), s1 = s.b_layer(1);
  for (const auto& [w, c] : s1.terms()) {
    const uint32_t j = w.last_run();
    if (!set_contains(m.krasner.J, j)) return std::nullopt;
    m.M[j].push_back(w.first_run());
  }
  m.Jprime = m.krasner.J;
  for (const auto& [w, c] : p1.terms()) {
    m.L[w.first_run()].push_back(w.last_run());
  }
  for (const auto& [i, li] : m.L) m.Iprime.push_back(i);
  for (const auto& [w, c] : p2.terms()) {
    auto [x1, l] = w.split_last_b();
    m.Lw[x1].push_back(l);
  }
  return m;
}

}  // namespace detail

/// Shape classification of a 4-code factorization: which side carries the
/// high layers (swapping to (S~, P~) when S does), and, for nonnegative
/// pairs, the structural parameter extraction. When several structural cases
/// fit, the most constrained one is reported (3 before 2).
inline ClassifyReport classify_4code(const FactorizationPair& f) {
  const std::size_t k = f.P.max_b_count();
  const std::size_t h = f.S.max_b_count();
  if (f.P.is_zero() || f.S.is_zero() || k + h != 3) {
    throw verify_error("NotAFourCode", "P(A-1)S + 1 does not span layers 0..4");
  }

  ClassifyReport rep;
  rep.swapped = h > k;
  const NcPoly pc = rep.swapped ? f.S.reversed() : f.P;
  const NcPoly sc = rep.swapped ? f.P.reversed() : f.S;
  rep.l0_case = sc.max_b_count() == 0 ? 1 : 2;

  int sign = 0;
  if (pc.is_nonneg() && sc.is_nonneg()) {
    sign = +1;
  } else if ((-pc).is_nonneg() && (-sc).is_nonneg()) {
    sign = -1;
  }
  if (sign == 0) return rep;
  rep.sign = sign;

  const NcPoly p = sign > 0 ? pc : -pc;
  const NcPoly s = sign > 0 ? sc : -sc;
  if (rep.l0_case == 1) {
    M0Params m;
    m.case_id = 1;
    rep.m0 = std::move(m);
  } else if (auto m3 = detail::extract_m0_case3(p, s)) {
    rep.m0 = std::move(m3);
  } else if (auto m2 = detail::extract_m0_case2(p, s)) {
    rep.m0 = std::move(m2);
  }
  return rep;
}

}  // namespace codefact
