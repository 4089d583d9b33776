#pragma once

#include <map>
#include <string>
#include <vector>

#include "codefact/codes.hpp"
#include "codefact/cyclic.hpp"
#include "codefact/errors.hpp"
#include "codefact/factorization.hpp"

namespace codefact {

/// Parameters of a 3-code factorization
///   P = a^I + sum_{i in I'} a^i b a^(L_i),  S = a^J + sum_{j in J} a^(M_j) b a^j.
/// Indices absent from L or M stand for the empty set.
struct ThreeCodeSpec {
  KrasnerPair krasner;
  IndexSet Iprime;
  std::map<uint32_t, IndexSet> L;
  std::map<uint32_t, IndexSet> M;
};

/// Extension step: a verified base (P', S) plus the new top layer
/// P_(k+1) = sum_z z b a^(L_z), keyed by words z of the derived set Q_k.
struct TeocExtension {
  FactorizationPair base;
  std::map<Word, IndexSet> Lext;
};

/// Parameters of the pair
///   P = a^I + sum_{i in I} a^i b a^(L_i) + sum_{i,l in L_i} a^i b a^l b a^(L_(i,l)),
///   S = a^J + sum_{j in J'} a^(M_j) b a^j.
struct FourCodeSpec {
  KrasnerPair krasner;
  IndexSet Jprime;
  std::map<uint32_t, IndexSet> L;                         // i in I -> L_i
  std::map<uint32_t, IndexSet> M;                         // j in J' -> M_j
  std::map<uint32_t, std::map<uint32_t, IndexSet>> L2;    // i -> l -> L_(i,l)
};

namespace detail {

inline IndexSet map_at(const std::map<uint32_t, IndexSet>& m, uint32_t key) {
  auto it = m.find(key);
  return it == m.end() ? IndexSet{} : it->second;
}

inline void require_krasner(const KrasnerPair& k, const char* who) {
  if (!verify_krasner(k)) {
    throw std::invalid_argument(std::string(who) + ": (I,J) is not a Krasner factorization of Z_n");
  }
}

/// Post-condition common to every generator here: the pair must expand to a
/// characteristic polynomial, be positive, and give a maximal code. Failures
/// indicate an implementation bug, not bad input.
inline CodeSpec ensure_positive_factorization(const FactorizationPair& f, const char* who) {
  CodeSpec code;
  try {
    code = code_from_factorization(f.P, f.S);
  } catch (const verify_error& e) {
    throw std::logic_error(std::string(who) + ": constructed pair does not expand to a code: " + e.what());
  }
  if (!is_positive(f)) {
    throw std::logic_error(std::string(who) + ": constructed pair is not positive");
  }
  if (!is_maximal_code(code)) {
    throw std::logic_error(std::string(who) + ": constructed code is not maximal");
  }
  return code;
}

/// Reads S = a^J + sum_j a^(M_j) b a^j, returning (J, M). The last runs of
/// the one-b words must all lie in J; `who` decides whether a violation is a
/// precondition error or the PreconditionJprime verification failure.
struct BasicS {
  IndexSet J;
  std::map<uint32_t, IndexSet> M;
};

inline BasicS read_basic_s(const NcPoly& S, const char* who, bool jprime_as_verify_error) {
  if (!S.is_characteristic() || S.max_b_count() > 1 || S.b_layer(0).is_zero()) {
    throw std::invalid_argument(std::string(who) +
                                ": S must have the shape a^J + sum_j a^(M_j) b a^j");
  }
  BasicS out;
  out.J = to_exppoly(S.b_layer(0)).support();
  const NcPoly s1 = S.b_layer(1);
  for (const auto& [w, c] : s1.terms()) {
    const uint32_t j = w.last_run();
    if (!set_contains(out.J, j)) {
      if (jprime_as_verify_error) {
        throw verify_error("PreconditionJprime",
                           "S contains " + w.str() + " but " + std::to_string(j) +
                               " is outside supp(S_0)",
                           {{"word", w.str()}, {"j", std::to_string(j)}});
      }
      throw std::invalid_argument(std::string(who) + ": word " + w.str() +
                                  " of S_1 ends outside supp(S_0)");
    }
    out.M[j].push_back(w.first_run());
  }
  return out;
}

inline void require_verified_positive(const FactorizationPair& f, const char* who) {
  if (!is_positive(f)) {
    throw std::invalid_argument(std::string(who) + ": pair is not positive");
  }
  try {
    code_from_factorization(f.P, f.S);
  } catch (const verify_error& e) {
    throw std::invalid_argument(std::string(who) +
                                ": pair is not a factorization of a code: " + std::string(e.what()));
  }
}

}  // namespace detail

/// The 1-code seed (a^I, a^J) of a Krasner pair.
inline FactorizationPair krasner_seed(const KrasnerPair& k) {
  detail::require_krasner(k, "krasner_seed");
  FactorizationPair f{to_ncpoly(set_poly(k.I)), to_ncpoly(set_poly(k.J))};
  detail::ensure_positive_factorization(f, "krasner_seed");
  return f;
}

/// Builds P = a^I, S = S_0 + ... + S_t with S_i = sum_{w in supp(S_(i-1))}
/// a^(M_w) b w, where level i-1 of `levels` maps w to M_w (missing words get
/// the empty set). Every nonempty M_w must satisfy the tower condition
/// a^(M_w)(a-1)a^I + a^I >= 0.
inline FactorizationPair build_tower(const KrasnerPair& k,
                                     const std::vector<std::map<Word, IndexSet>>& levels) {
  detail::require_krasner(k, "build_tower");
  const ExpPoly ai = set_poly(k.I);
  const ExpPoly am1 = ExpPoly::a_minus_one();

  NcPoly prev = to_ncpoly(set_poly(k.J));
  NcPoly s = prev;
  for (const auto& level : levels) {
    for (const auto& [w, mw] : level) {
      if (!prev.contains(w)) {
        throw std::invalid_argument("build_tower: level keys must lie in the previous layer: " +
                                    w.str());
      }
    }
    NcPoly next;
    for (const auto& [w, c] : prev.terms()) {
      const IndexSet mw = [&] {
        auto it = level.find(w);
        return it == level.end() ? IndexSet{} : it->second;
      }();
      if (mw.empty()) continue;
      if (!(set_poly(mw) * am1 * ai + ai).is_nonneg()) {
        throw verify_error("TowerConditionViolated",
                           "a^(M_w)(a-1)a^I + a^I has a negative coefficient at w = " + w.str(),
                           {{"word", w.str()}});
      }
      next += to_ncpoly(set_poly(mw)) * NcPoly::letter_b() * NcPoly::monomial(w);
    }
    s += next;
    prev = std::move(next);
    if (prev.is_zero()) break;
  }

  FactorizationPair f{to_ncpoly(ai), std::move(s)};
  detail::ensure_positive_factorization(f, "build_tower");
  return f;
}

/// Validates the 3-code equations in order and materializes the pair.
/// Verification failures carry the violated equation tag: "3.1", "3.0",
/// "3.2" or "3.3".
inline FactorizationPair check_3code(const ThreeCodeSpec& spec) {
  detail::require_krasner(spec.krasner, "check_3code");
  const IndexSet& I = spec.krasner.I;
  const IndexSet& J = spec.krasner.J;
  for (const auto& [i, li] : spec.L) {
    if (!set_contains(spec.Iprime, i)) {
      throw std::invalid_argument("check_3code: L is keyed by I'");
    }
  }
  for (const auto& [j, mj] : spec.M) {
    if (!set_contains(J, j)) throw std::invalid_argument("check_3code: M is keyed by J");
  }

  const ExpPoly ai = set_poly(I);
  const ExpPoly aj = set_poly(J);
  const ExpPoly am1 = ExpPoly::a_minus_one();

  // (3.1): a^(T_j) = a^(M_j)(a-1)a^I + a^I >= 0.
  std::map<uint32_t, ExpPoly> tj;
  IndexSet t_union;
  for (uint32_t j : J) {
    ExpPoly t = set_poly(detail::map_at(spec.M, j)) * am1 * ai + ai;
    if (!t.is_nonneg()) {
      throw verify_error("3.1", "a^(M_j)(a-1)a^I + a^I has a negative coefficient",
                         {{"j", std::to_string(j)}});
    }
    if (!t.is_zero_one()) throw std::logic_error("check_3code: nonnegative T_j is not a set");
    for (uint32_t x : t.support()) t_union.push_back(x);
    tj.emplace(j, std::move(t));
  }
  t_union = normalized_set(std::move(t_union));

  // (3.0): every i in I' with L_i nonempty lies in the union of the T_j.
  for (uint32_t i : spec.Iprime) {
    if (!detail::map_at(spec.L, i).empty() && !set_contains(t_union, i)) {
      throw verify_error("3.0", "L_i is nonempty but i is outside the union of the T_j",
                         {{"i", std::to_string(i)}});
    }
  }

  // (3.2): a^(L_i)(a-1)a^J + a^(J_i) >= 0 with J_i = { j : i in T_j }.
  for (uint32_t i : spec.Iprime) {
    IndexSet ji;
    for (uint32_t j : J) {
      if (tj.at(j).coeff(i) != 0) ji.push_back(j);
    }
    if (!(set_poly(detail::map_at(spec.L, i)) * am1 * aj + set_poly(ji)).is_nonneg()) {
      throw verify_error("3.2", "a^(L_i)(a-1)a^J + a^(J_i) has a negative coefficient",
                         {{"i", std::to_string(i)}});
    }
  }

  // (3.3): for i in I' \ I, a^(L_i)(a-1)a^(M_j) + a^(L_i) >= 0.
  for (uint32_t i : spec.Iprime) {
    if (set_contains(I, i)) continue;
    const ExpPoly li = set_poly(detail::map_at(spec.L, i));
    for (uint32_t j : J) {
      if (!(li * am1 * set_poly(detail::map_at(spec.M, j)) + li).is_nonneg()) {
        throw verify_error("3.3", "a^(L_i)(a-1)a^(M_j) + a^(L_i) has a negative coefficient",
                           {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
      }
    }
  }

  NcPoly p = to_ncpoly(ai);
  for (uint32_t i : spec.Iprime) {
    p += NcPoly::monomial(Word::a_power(i)) * NcPoly::letter_b() *
         to_ncpoly(set_poly(detail::map_at(spec.L, i)));
  }
  NcPoly s = to_ncpoly(aj);
  for (uint32_t j : J) {
    s += to_ncpoly(set_poly(detail::map_at(spec.M, j))) * NcPoly::letter_b() *
         NcPoly::monomial(Word::a_power(j));
  }
  FactorizationPair f{std::move(p), std::move(s)};
  detail::ensure_positive_factorization(f, "check_3code");
  return f;
}

/// Computes the one-b layer
///   C_1 = a^I b a^J + sum_i a^i b a^(L_i)(a-1)a^J + sum_j a^I(a-1)a^(M_j) b a^j
/// and returns it iff it is nonnegative. The verdict is cross-checked against
/// the equation route (3.1)+(3.0)+(3.2); the two must agree.
inline NcPoly check_c1(const ThreeCodeSpec& spec) {
  detail::require_krasner(spec.krasner, "check_c1");
  const ExpPoly ai = set_poly(spec.krasner.I);
  const ExpPoly aj = set_poly(spec.krasner.J);
  const ExpPoly am1 = ExpPoly::a_minus_one();
  const NcPoly b = NcPoly::letter_b();

  NcPoly c1 = to_ncpoly(ai) * b * to_ncpoly(aj);
  for (uint32_t i : spec.Iprime) {
    c1 += NcPoly::monomial(Word::a_power(i)) * b *
          to_ncpoly(set_poly(detail::map_at(spec.L, i)) * am1 * aj);
  }
  for (uint32_t j : spec.krasner.J) {
    c1 += to_ncpoly(ai * am1 * set_poly(detail::map_at(spec.M, j))) * b *
          NcPoly::monomial(Word::a_power(j));
  }

  bool equations_hold = true;
  try {
    check_3code(ThreeCodeSpec{spec.krasner, spec.Iprime, spec.L, spec.M});
  } catch (const verify_error& e) {
    if (e.tag() != "3.1" && e.tag() != "3.0" && e.tag() != "3.2") throw;
    equations_hold = false;
  }
  if (c1.is_nonneg() != equations_hold) {
    throw std::logic_error("check_c1: direct nonnegativity and the equation route disagree");
  }
  if (!c1.is_nonneg()) {
    for (const auto& [w, c] : c1.terms()) {
      if (c < 0) {
        throw verify_error("NegativeCoefficient",
                           "C_1 has coefficient " + c.str() + " at " + w.str(),
                           {{"word", w.str()}, {"coefficient", c.str()}});
      }
    }
  }
  return c1;
}

/// Extends a verified base (P', S) by a new top layer sum_z z b a^(L_z).
/// The sets Q_k and J_z are always rederived from the base code, never taken
/// from the caller.
inline FactorizationPair teoc_extend(const TeocExtension& ext) {
  const detail::BasicS sinfo = detail::read_basic_s(ext.base.S, "teoc_extend", false);
  detail::require_verified_positive(ext.base, "teoc_extend");

  const std::size_t k = ext.base.P.max_b_count();
  const std::vector<NcPoly> layers = layer_decompose(ext.base);
  std::map<Word, IndexSet> jz;
  for (const auto& [w, c] : layers[k + 1].terms()) {
    auto [z, j] = w.split_last_b();
    if (!set_contains(sinfo.J, j)) {
      throw std::logic_error("teoc_extend: base layer k+1 word ends outside supp(S_0)");
    }
    jz[z].push_back(j);
  }

  bool any = false;
  for (const auto& [z, lz] : ext.Lext) {
    if (!lz.empty()) any = true;
  }
  if (!any) {
    throw verify_error("EmptyExtension", "the new top layer P_(k+1) must be nonnull");
  }
  for (const auto& [z, lz] : ext.Lext) {
    if (!jz.count(z)) {
      throw verify_error("NotInQk", "extension key " + z.str() + " is not in Q_k",
                         {{"z", z.str()}});
    }
  }

  const ExpPoly aj = set_poly(sinfo.J);
  const ExpPoly am1 = ExpPoly::a_minus_one();
  auto lz_of = [&](const Word& z) {
    auto it = ext.Lext.find(z);
    return it == ext.Lext.end() ? IndexSet{} : it->second;
  };

  // Eq12: a^(L_z)(a-1)a^J + a^(J_z) >= 0 for every z in Q_k.
  for (const auto& [z, jzset] : jz) {
    const IndexSet lz = lz_of(z);
    if (lz.empty()) continue;
    if (!(set_poly(lz) * am1 * aj + set_poly(jzset)).is_nonneg()) {
      throw verify_error("Eq12Violation",
                         "a^(L_z)(a-1)a^J + a^(J_z) has a negative coefficient at z = " + z.str(),
                         {{"z", z.str()}});
    }
  }

  // Eq13: for z in Q_k outside supp(P_k), a^(L_z)(a-1)a^(M_j) + a^(L_z) >= 0.
  const NcPoly pk = ext.base.P.b_layer(k);
  for (const auto& [z, jzset] : jz) {
    const IndexSet lz = lz_of(z);
    if (lz.empty() || pk.contains(z)) continue;
    const ExpPoly alz = set_poly(lz);
    for (uint32_t j : sinfo.J) {
      if (!(alz * am1 * set_poly(detail::map_at(sinfo.M, j)) + alz).is_nonneg()) {
        throw verify_error("Eq13Violation",
                           "a^(L_z)(a-1)a^(M_j) + a^(L_z) has a negative coefficient",
                           {{"z", z.str()}, {"j", std::to_string(j)}});
      }
    }
  }

  NcPoly p = ext.base.P;
  for (const auto& [z, lz] : ext.Lext) {
    p += NcPoly::monomial(z) * NcPoly::letter_b() * to_ncpoly(set_poly(lz));
  }
  FactorizationPair f{std::move(p), ext.base.S};
  detail::ensure_positive_factorization(f, "teoc_extend");

  const std::size_t expected_top = k + (ext.base.S.b_layer(1).is_zero() ? 2 : 3);
  if (layer_decompose(f).size() != expected_top + 1) {
    throw std::logic_error("teoc_extend: extended code has an unexpected top layer");
  }
  return f;
}

/// Drops the layers of P above r: (P_0 + ... + P_r, S). Requires S of the
/// shape a^J + sum_{j in J} a^(M_j) b a^j; a one-b word of S ending outside
/// supp(S_0) is reported as PreconditionJprime.
inline FactorizationPair teoc_peel(const FactorizationPair& f, std::size_t r) {
  detail::read_basic_s(f.S, "teoc_peel", true);
  detail::require_verified_positive(f, "teoc_peel");

  const std::size_t k = f.P.max_b_count();
  if (r > k || f.P.b_layer(r).is_zero()) {
    throw verify_error("ZeroLayer", "P_r is the null polynomial", {{"r", std::to_string(r)}});
  }
  NcPoly p;
  for (std::size_t i = 0; i <= r; ++i) p += f.P.b_layer(i);
  FactorizationPair out{std::move(p), f.S};
  detail::ensure_positive_factorization(out, "teoc_peel");
  return out;
}

/// Validates the equations of the 4-code family with I' = I, in the fixed
/// order 81, 80, 82, 83, 84, 85bis, 86bis, and materializes the pair.
inline FactorizationPair check_4code_item3(const FourCodeSpec& spec) {
  detail::require_krasner(spec.krasner, "check_4code_item3");
  const IndexSet& I = spec.krasner.I;
  const IndexSet& J = spec.krasner.J;
  for (const auto& [i, li] : spec.L) {
    if (!set_contains(I, i)) throw std::invalid_argument("check_4code_item3: L is keyed by I");
  }
  for (const auto& [j, mj] : spec.M) {
    if (!set_contains(spec.Jprime, j)) {
      throw std::invalid_argument("check_4code_item3: M is keyed by J'");
    }
  }
  for (const auto& [i, inner] : spec.L2) {
    if (!set_contains(I, i)) throw std::invalid_argument("check_4code_item3: L2 is keyed by I");
    for (const auto& [l, lil] : inner) {
      if (!set_contains(detail::map_at(spec.L, i), l)) {
        throw std::invalid_argument("check_4code_item3: L2 keys (i,l) need l in L_i");
      }
    }
  }

  const ExpPoly ai = set_poly(I);
  const ExpPoly aj = set_poly(J);
  const ExpPoly am1 = ExpPoly::a_minus_one();
  auto l2_at = [&](uint32_t i, uint32_t l) {
    auto it = spec.L2.find(i);
    if (it == spec.L2.end()) return IndexSet{};
    return detail::map_at(it->second, l);
  };

  // (81): a^(R_i) = a^(L_i)(a-1)a^J + a^J >= 0.
  std::map<uint32_t, ExpPoly> ri;
  IndexSet r_union;
  for (uint32_t i : I) {
    ExpPoly r = set_poly(detail::map_at(spec.L, i)) * am1 * aj + aj;
    if (!r.is_nonneg()) {
      throw verify_error("81", "a^(L_i)(a-1)a^J + a^J has a negative coefficient",
                         {{"i", std::to_string(i)}});
    }
    if (!r.is_zero_one()) throw std::logic_error("check_4code_item3: nonnegative R_i is not a set");
    for (uint32_t x : r.support()) r_union.push_back(x);
    ri.emplace(i, std::move(r));
  }
  r_union = normalized_set(std::move(r_union));

  // (80): every j in J' with M_j nonempty lies in the union of the R_i.
  for (uint32_t j : spec.Jprime) {
    if (!detail::map_at(spec.M, j).empty() && !set_contains(r_union, j)) {
      throw verify_error("80", "M_j is nonempty but j is outside the union of the R_i",
                         {{"j", std::to_string(j)}});
    }
  }

  // (82): a^(M_j)(a-1)a^I + a^(I_j) >= 0 with I_j = { i : j in R_i }.
  for (uint32_t j : spec.Jprime) {
    IndexSet ij;
    for (uint32_t i : I) {
      if (ri.at(i).coeff(j) != 0) ij.push_back(i);
    }
    if (!(set_poly(detail::map_at(spec.M, j)) * am1 * ai + set_poly(ij)).is_nonneg()) {
      throw verify_error("82", "a^(M_j)(a-1)a^I + a^(I_j) has a negative coefficient",
                         {{"j", std::to_string(j)}});
    }
  }

  // (83)/(84): the two-b layer conditions split over J' and J.
  for (uint32_t i : I) {
    for (uint32_t l : detail::map_at(spec.L, i)) {
      const ExpPoly alil = set_poly(l2_at(i, l));
      for (uint32_t j : spec.Jprime) {
        const ExpPoly amj = set_poly(detail::map_at(spec.M, j));
        if (set_contains(J, j)) {
          if (!(alil * am1 * amj + alil + amj).is_nonneg()) {
            throw verify_error("83",
                               "a^(L_(i,l))(a-1)a^(M_j) + a^(L_(i,l)) + a^(M_j) has a "
                               "negative coefficient",
                               {{"i", std::to_string(i)},
                                {"l", std::to_string(l)},
                                {"j", std::to_string(j)}});
          }
        } else if (!(alil * am1 * amj + amj).is_nonneg()) {
          throw verify_error("84",
                             "a^(L_(i,l))(a-1)a^(M_j) + a^(M_j) has a negative coefficient",
                             {{"i", std::to_string(i)},
                              {"l", std::to_string(l)},
                              {"j", std::to_string(j)}});
        }
      }
    }
  }

  // (85bis): a^(R_(i,l)) = a^(L_(i,l))(a-1)a^J + a^J >= 0.
  std::map<std::pair<uint32_t, uint32_t>, ExpPoly> ril;
  for (uint32_t i : I) {
    for (uint32_t l : detail::map_at(spec.L, i)) {
      ExpPoly r = set_poly(l2_at(i, l)) * am1 * aj + aj;
      if (!r.is_nonneg()) {
        throw verify_error("85bis", "a^(L_(i,l))(a-1)a^J + a^J has a negative coefficient",
                           {{"i", std::to_string(i)}, {"l", std::to_string(l)}});
      }
      ril.emplace(std::make_pair(i, l), std::move(r));
    }
  }

  // (86bis): a negative coefficient of a^l in a^(L_i)(a-1)a^(M_j) + a^(M_j)
  // must be repaired by j in R_(i,l).
  for (uint32_t i : I) {
    const ExpPoly ali = set_poly(detail::map_at(spec.L, i));
    for (uint32_t j : spec.Jprime) {
      const ExpPoly amj = set_poly(detail::map_at(spec.M, j));
      const ExpPoly probe = ali * am1 * amj + amj;
      for (uint32_t l : detail::map_at(spec.L, i)) {
        if (probe.coeff(l) < 0 && ril.at({i, l}).coeff(j) == 0) {
          throw verify_error("86bis",
                             "coefficient of a^l in a^(L_i)(a-1)a^(M_j) + a^(M_j) is negative "
                             "but j is not in R_(i,l)",
                             {{"i", std::to_string(i)},
                              {"j", std::to_string(j)},
                              {"l", std::to_string(l)}});
        }
      }
    }
  }

  const NcPoly b = NcPoly::letter_b();
  NcPoly p = to_ncpoly(ai);
  for (uint32_t i : I) {
    p += NcPoly::monomial(Word::a_power(i)) * b * to_ncpoly(set_poly(detail::map_at(spec.L, i)));
    for (uint32_t l : detail::map_at(spec.L, i)) {
      p += NcPoly::monomial(Word::a_power(i)) * b * NcPoly::monomial(Word::a_power(l)) * b *
           to_ncpoly(set_poly(l2_at(i, l)));
    }
  }
  NcPoly s = to_ncpoly(aj);
  for (uint32_t j : spec.Jprime) {
    s += to_ncpoly(set_poly(detail::map_at(spec.M, j))) * b * NcPoly::monomial(Word::a_power(j));
  }
  FactorizationPair f{std::move(p), std::move(s)};
  detail::ensure_positive_factorization(f, "check_4code_item3");
  if (f.P.max_b_count() + f.S.max_b_count() > 3) {
    throw std::logic_error("check_4code_item3: layers above 4");
  }
  return f;
}

}  // namespace codefact
