#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "codefact/construct.hpp"
#include "codefact/cyclic.hpp"
#include "codefact/factorization.hpp"
#include "codefact/io.hpp"

namespace codefact::fixtures {

inline IndexSet up_to(uint32_t lo, uint32_t hi) {
  IndexSet s;
  for (uint32_t x = lo; x <= hi; ++x) s.push_back(x);
  return s;
}

inline IndexSet odds_up_to(uint32_t hi) {
  IndexSet s;
  for (uint32_t x = 1; x <= hi; x += 2) s.push_back(x);
  return s;
}

inline NcPoly A(const IndexSet& s) { return to_ncpoly(set_poly(s)); }
inline NcPoly B() { return NcPoly::letter_b(); }

// ---------------------------------------------------------------------------
// ex1: the running 5-code example
//   P = 1 + a^2 b a^{0..6} + a^2 b a^3 b a^{0..6},  S = a^{0..4} + a^{0,1} b a^{0..4}
// ---------------------------------------------------------------------------

inline FactorizationPair ex1_pair() {
  NcPoly p = NcPoly::one() + A({2}) * B() * A(up_to(0, 6)) +
             A({2}) * B() * A({3}) * B() * A(up_to(0, 6));
  NcPoly s = A(up_to(0, 4)) + A({0, 1}) * B() * A(up_to(0, 4));
  return {std::move(p), std::move(s)};
}

/// The five layers of the ex1 code, exactly as expected from the pair.
inline std::vector<NcPoly> ex1_layers() {
  std::vector<NcPoly> c(5);
  c[0] = A({5});
  c[1] = A({2}) * B() * A(up_to(7, 11));
  c[2] = B() * A({0, 1}) * B() * A(up_to(0, 4)) +
         A({2}) * B() * A({2, 4, 5, 6, 7, 8}) * B() * A(up_to(0, 4)) +
         A({2}) * B() * A({3}) * B() * A(up_to(7, 11));
  c[3] = A({2}) * B() * A(up_to(0, 6)) * B() * A({0, 1}) * B() * A(up_to(0, 4)) +
         A({2}) * B() * A({3}) * B() * A(up_to(2, 8)) * B() * A(up_to(0, 4));
  c[4] = A({2}) * B() * A({3}) * B() * A(up_to(0, 6)) * B() * A({0, 1}) * B() * A(up_to(0, 4));
  return c;
}

/// ex1 seen through the 3-code equations: I = {0}, J = {0..4}, I' = {2},
/// L_2 = {0..6}, M_j = {0,1} for every j.
inline ThreeCodeSpec ex1_three_code_spec() {
  ThreeCodeSpec s;
  s.krasner = {{0}, up_to(0, 4), 5};
  s.Iprime = {2};
  s.L[2] = up_to(0, 6);
  for (uint32_t j : s.krasner.J) s.M[j] = {0, 1};
  return s;
}

// ---------------------------------------------------------------------------
// sic / noc1: the two 4-code parameter sets over Z_24
// ---------------------------------------------------------------------------

inline KrasnerPair z24_krasner() { return {{0, 2, 4, 12, 14, 16}, {0, 1, 6, 7}, 24}; }

inline FourCodeSpec sic_spec() {
  FourCodeSpec s;
  s.krasner = z24_krasner();
  s.Jprime = {21};
  s.M[21] = {2, 3};
  for (uint32_t i : s.krasner.I) {
    s.L[i] = odds_up_to(19);
    for (uint32_t l : s.L[i]) s.L2[i][l] = odds_up_to(19);
  }
  return s;
}

inline FourCodeSpec noc1_spec() {
  FourCodeSpec s;
  s.krasner = z24_krasner();
  s.Jprime = {21};
  s.M[21] = {2, 3};
  for (uint32_t i : s.krasner.I) {
    s.L[i] = {1, 9, 11, 13};
    for (uint32_t l : s.L[i]) s.L2[i][l] = odds_up_to(19);
  }
  return s;
}

inline FactorizationPair four_code_pair(const FourCodeSpec& s) {
  NcPoly p = A(s.krasner.I);
  for (uint32_t i : s.krasner.I) {
    auto li = s.L.count(i) ? s.L.at(i) : IndexSet{};
    p += A({i}) * B() * A(li);
    for (uint32_t l : li) {
      p += A({i}) * B() * A({l}) * B() * A(s.L2.at(i).at(l));
    }
  }
  NcPoly q = A(s.krasner.J);
  for (uint32_t j : s.Jprime) q += A(s.M.at(j)) * B() * A({j});
  return {std::move(p), std::move(q)};
}

// ---------------------------------------------------------------------------
// hajos24: the Z_24 factorization pair and its witness data
// ---------------------------------------------------------------------------

struct Hajos24 {
  uint32_t n = 24;
  IndexSet T{0, 4, 8, 12, 16, 20};
  IndexSet R{0, 3, 6, 21};          // non-strong
  IndexSet Rprime{0, 6, 21, 27};    // strong variant (27 > 24 on purpose)
  IndexSet M{2, 3};
  IndexSet L{1, 9, 11, 13};
  IndexSet Lprime = odds_up_to(19);
};

inline Hajos24 hajos24_data() { return Hajos24{}; }

/// True iff (M,L) witnesses (T,R) against some Krasner pair of Z_n.
inline bool witness_pair_valid(const IndexSet& T, const IndexSet& R, uint32_t n,
                               const IndexSet& M, const IndexSet& L) {
  for (const auto& k : enumerate_krasner_chains(n)) {
    if (hajos_witness_matches(T, R, HajosWitness{k, M, L})) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// remark: the closure-hypothesis counterexample instance (s=1, t=1, n=2)
//   P = 1 + (b a^{0,2} - a b a^2),  S = a^{0,1} + b a^4
// ---------------------------------------------------------------------------

inline FactorizationPair remark_pair() {
  NcPoly p = NcPoly::one() + B() * A({0, 2}) - A({1}) * B() * A({2});
  NcPoly s = A({0, 1}) + B() * A({4});
  return {std::move(p), std::move(s)};
}

inline NcPoly remark_layer1() { return B() * A({1}) + A({1}) * B() * A({2}); }

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

struct FixtureResult {
  bool ok = true;
  nlohmann::json report;
};

inline std::vector<std::string> fixture_names() {
  return {"ex1", "sic", "noc1", "hajos24", "remark"};
}

namespace detail {

class Recorder {
public:
  void check(const std::string& name, bool pass, nlohmann::json detail = nullptr) {
    nlohmann::json c{{"name", name}, {"pass", pass}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks_.push_back(std::move(c));
    ok_ = ok_ && pass;
  }

  FixtureResult finish(const std::string& name, nlohmann::json extra = nlohmann::json::object()) {
    extra["fixture"] = name;
    extra["ok"] = ok_;
    extra["checks"] = std::move(checks_);
    return FixtureResult{ok_, std::move(extra)};
  }

private:
  bool ok_ = true;
  nlohmann::json checks_ = nlohmann::json::array();
};

inline FixtureResult run_ex1() {
  Recorder rec;
  const FactorizationPair f = ex1_pair();
  const auto layers = layer_decompose(f);
  const auto expected = ex1_layers();
  rec.check("layer_count", layers.size() == expected.size());
  for (std::size_t r = 0; r < expected.size() && r < layers.size(); ++r) {
    rec.check("C_" + std::to_string(r), layers[r] == expected[r]);
  }
  const CodeSpec code = code_from_factorization(f.P, f.S);
  rec.check("sardinas_patterson", sardinas_patterson(code).is_code);
  rec.check("kraft_sum_is_1", kraft_sum(code) == 1, io::rat_to_string(kraft_sum(code)));
  rec.check("is_positive", is_positive(f));
  rec.check("s_closure", check_s_closure(f.S));
  const ClassifyReport cls = classify_4code(f);
  rec.check("l0_case", cls.l0_case == 2);
  rec.check("m0_case", cls.m0 && cls.m0->case_id == 3 && cls.m0->Iprime == IndexSet{2});

  nlohmann::json extra;
  nlohmann::json jl = nlohmann::json::array();
  for (const auto& c : layers) jl.push_back(io::ncpoly_to_json(c));
  extra["layers"] = std::move(jl);
  extra["code_size"] = code.size();
  return rec.finish("ex1", std::move(extra));
}

inline FixtureResult run_four_code(const std::string& name, const FourCodeSpec& spec) {
  Recorder rec;
  FactorizationPair f;
  try {
    f = check_4code_item3(spec);
  } catch (const verify_error& e) {
    rec.check("accepted", false, io::error_to_json(e));
    return rec.finish(name);
  }
  rec.check("accepted", true);
  rec.check("pair_matches", f == four_code_pair(spec));
  rec.check("is_positive", is_positive(f));
  const auto layers = layer_decompose(f);
  rec.check("four_layers", layers.size() == 5 && !layers[4].is_zero());
  const CodeSpec code = code_from_factorization(f.P, f.S);
  rec.check("maximal", is_maximal_code(code));

  // J' = {21} lies outside J here, so the peeling route is out of scope for
  // both parameter sets; the truncation P_0 + P_1 behaves differently though.
  bool jprime_raised = false;
  try {
    teoc_peel(f, 1);
  } catch (const verify_error& e) {
    jprime_raised = e.tag() == "PreconditionJprime";
  }
  rec.check("peel_reports_PreconditionJprime", jprime_raised);
  const NcPoly truncated =
      (f.P.b_layer(0) + f.P.b_layer(1)) * NcPoly::alphabet_minus_one() * f.S + NcPoly::one();
  if (name == "sic") {
    // P' = P_0 + P_1 still defines a 3-code.
    rec.check("truncated_pair_is_3code",
              truncated.is_characteristic() && !truncated.contains(Word()) &&
                  is_maximal_code(CodeSpec::from_words(truncated.support())) &&
                  truncated.max_b_count() == 3);
  } else {
    rec.check("truncated_pair_not_characteristic", !truncated.is_characteristic());
  }

  nlohmann::json extra;
  extra["pair"] = io::pair_to_json(f);
  extra["code_size"] = code.size();
  return rec.finish(name, std::move(extra));
}

inline FixtureResult run_hajos24() {
  Recorder rec;
  const Hajos24 d = hajos24_data();
  rec.check("TR_is_factorization", is_factorization(d.T, d.R, d.n));
  const auto w = hajos_witness(d.T, d.R, d.n, 48);
  rec.check("TR_witness_found", w.has_value());
  rec.check("ML_valid", witness_pair_valid(d.T, d.R, d.n, d.M, d.L));
  rec.check("ML_not_strong", !is_strong_hajos(d.M, d.L));
  rec.check("holes_poly",
            holes_poly(d.M, d.L) == set_poly(IndexSet{1, 2, 5, 9, 13, 17}));

  rec.check("TRprime_is_factorization", is_factorization(d.T, d.Rprime, d.n));
  const auto wp = hajos_witness(d.T, d.Rprime, d.n, 48);
  rec.check("TRprime_witness_found", wp.has_value());
  rec.check("MLprime_valid", witness_pair_valid(d.T, d.Rprime, d.n, d.M, d.Lprime));
  rec.check("MLprime_strong", is_strong_hajos(d.M, d.Lprime));

  nlohmann::json extra;
  if (w) extra["witness"] = io::hajos_witness_to_json(*w);
  if (wp) extra["witness_strong_variant"] = io::hajos_witness_to_json(*wp);
  return rec.finish("hajos24", std::move(extra));
}

inline FixtureResult run_remark() {
  Recorder rec;
  const FactorizationPair f = remark_pair();
  const auto layers = layer_decompose(f);
  rec.check("layer1", layers.size() > 1 && layers[1] == remark_layer1());
  rec.check("layer1_nonneg", layers[1].is_nonneg());
  rec.check("closure_fails", !check_s_closure(f.S));
  rec.check("P1_has_negative_coefficient", !f.P.b_layer(1).is_nonneg());

  nlohmann::json extra;
  extra["layer1"] = io::ncpoly_to_json(layers[1]);
  return rec.finish("remark", std::move(extra));
}

}  // namespace detail

inline FixtureResult run_fixture(const std::string& name) {
  if (name == "ex1") return detail::run_ex1();
  if (name == "sic") return detail::run_four_code("sic", sic_spec());
  if (name == "noc1") return detail::run_four_code("noc1", noc1_spec());
  if (name == "hajos24") return detail::run_hajos24();
  if (name == "remark") return detail::run_remark();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace codefact::fixtures
