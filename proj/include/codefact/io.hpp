#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

#include "codefact/codes.hpp"
#include "codefact/construct.hpp"
#include "codefact/cyclic.hpp"
#include "codefact/errors.hpp"
#include "codefact/factorization.hpp"
#include "codefact/ncpoly.hpp"

namespace codefact::io {

using nlohmann::json;

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; both forms parse back.
inline json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max()) {
    return static_cast<int64_t>(v);
  }
  return v.str();
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline json set_to_json(const IndexSet& s) { return json(s); }

inline IndexSet set_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of nonnegative integers");
  IndexSet s;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<int64_t>() >= 0)) {
      throw std::invalid_argument("set elements must be nonnegative integers");
    }
    s.push_back(x.get<uint32_t>());
  }
  return normalized_set(std::move(s));
}

inline json word_to_json(const Word& w) { return w.str(); }

inline Word word_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a word string");
  return Word::parse(j.get<std::string>());
}

inline json ncpoly_to_json(const NcPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    terms.push_back(json::array({w.str(), int_to_json(c)}));
  }
  return json{{"terms", std::move(terms)}};
}

inline NcPoly ncpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("NcPoly: expected {\"terms\": [[word, coefficient], ...]}");
  }
  NcPoly p;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2) {
      throw std::invalid_argument("NcPoly: each term must be [word, coefficient]");
    }
    p += NcPoly::monomial(word_from_json(t[0]), int_from_json(t[1]));
  }
  return p;
}

inline json exppoly_to_json(const ExpPoly& p) {
  json coeffs = json::array();
  for (const auto& [e, c] : p.coeffs()) {
    coeffs.push_back(json::array({e, int_to_json(c)}));
  }
  return json{{"coeffs", std::move(coeffs)}};
}

inline ExpPoly exppoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("ExpPoly: expected {\"coeffs\": [[exponent, multiplicity], ...]}");
  }
  ExpPoly p;
  for (const auto& t : j["coeffs"]) {
    if (!t.is_array() || t.size() != 2) {
      throw std::invalid_argument("ExpPoly: each entry must be [exponent, multiplicity]");
    }
    p += ExpPoly::monomial(t[0].get<uint32_t>(), int_from_json(t[1]));
  }
  return p;
}

inline json code_to_json(const CodeSpec& c) {
  json words = json::array();
  for (const Word& w : c.words()) words.push_back(w.str());
  return json{{"words", std::move(words)}};
}

inline CodeSpec code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("words") || !j["words"].is_array()) {
    throw std::invalid_argument("CodeSpec: expected {\"words\": [word, ...]}");
  }
  std::vector<Word> ws;
  for (const auto& w : j["words"]) ws.push_back(word_from_json(w));
  return CodeSpec::from_words(std::move(ws));
}

inline json pair_to_json(const FactorizationPair& f) {
  return json{{"P", ncpoly_to_json(f.P)}, {"S", ncpoly_to_json(f.S)}};
}

inline FactorizationPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("P") || !j.contains("S")) {
    throw std::invalid_argument("FactorizationPair: expected {\"P\": ..., \"S\": ...}");
  }
  return FactorizationPair{ncpoly_from_json(j["P"]), ncpoly_from_json(j["S"])};
}

inline json krasner_to_json(const KrasnerPair& k) {
  return json{{"I", set_to_json(k.I)}, {"J", set_to_json(k.J)}, {"n", k.n}};
}

inline KrasnerPair krasner_from_json(const json& j) {
  if (!j.is_object() || !j.contains("I") || !j.contains("J") || !j.contains("n")) {
    throw std::invalid_argument("KrasnerPair: expected {\"I\": [...], \"J\": [...], \"n\": ...}");
  }
  return KrasnerPair{set_from_json(j["I"]), set_from_json(j["J"]), j["n"].get<uint32_t>()};
}

inline json setmap_to_json(const std::map<uint32_t, IndexSet>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = set_to_json(v);
  return out;
}

inline std::map<uint32_t, IndexSet> setmap_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected an object of index -> set");
  std::map<uint32_t, IndexSet> m;
  for (const auto& [k, v] : j.items()) {
    m[static_cast<uint32_t>(std::stoul(k))] = set_from_json(v);
  }
  return m;
}

inline json three_code_spec_to_json(const ThreeCodeSpec& s) {
  return json{{"krasner", krasner_to_json(s.krasner)},
              {"Iprime", set_to_json(s.Iprime)},
              {"L", setmap_to_json(s.L)},
              {"M", setmap_to_json(s.M)}};
}

inline ThreeCodeSpec three_code_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("krasner")) {
    throw std::invalid_argument("ThreeCodeSpec: expected {krasner, Iprime, L, M}");
  }
  ThreeCodeSpec s;
  s.krasner = krasner_from_json(j.at("krasner"));
  if (j.contains("Iprime")) s.Iprime = set_from_json(j["Iprime"]);
  if (j.contains("L")) s.L = setmap_from_json(j["L"]);
  if (j.contains("M")) s.M = setmap_from_json(j["M"]);
  return s;
}

inline json tower_levels_to_json(const std::vector<std::map<Word, IndexSet>>& levels) {
  json out = json::array();
  for (const auto& level : levels) {
    json l = json::object();
    for (const auto& [w, s] : level) l[w.str()] = set_to_json(s);
    out.push_back(std::move(l));
  }
  return out;
}

inline std::vector<std::map<Word, IndexSet>> tower_levels_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tower levels: expected an array of objects");
  std::vector<std::map<Word, IndexSet>> levels;
  for (const auto& l : j) {
    if (!l.is_object()) throw std::invalid_argument("tower level: expected word -> set");
    std::map<Word, IndexSet> level;
    for (const auto& [k, v] : l.items()) level[Word::parse(k)] = set_from_json(v);
    levels.push_back(std::move(level));
  }
  return levels;
}

inline json teoc_extension_to_json(const TeocExtension& e) {
  json lext = json::object();
  for (const auto& [z, s] : e.Lext) lext[z.str()] = set_to_json(s);
  return json{{"base", pair_to_json(e.base)}, {"Lext", std::move(lext)}};
}

inline TeocExtension teoc_extension_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("Lext")) {
    throw std::invalid_argument("TeocExtension: expected {base, Lext}");
  }
  TeocExtension e;
  e.base = pair_from_json(j["base"]);
  if (!j["Lext"].is_object()) throw std::invalid_argument("Lext: expected word -> set");
  for (const auto& [k, v] : j["Lext"].items()) e.Lext[Word::parse(k)] = set_from_json(v);
  return e;
}

inline json four_code_spec_to_json(const FourCodeSpec& s) {
  json l2 = json::object();
  for (const auto& [i, inner] : s.L2) l2[std::to_string(i)] = setmap_to_json(inner);
  return json{{"krasner", krasner_to_json(s.krasner)},
              {"Jprime", set_to_json(s.Jprime)},
              {"L", setmap_to_json(s.L)},
              {"M", setmap_to_json(s.M)},
              {"L2", std::move(l2)}};
}

inline FourCodeSpec four_code_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("krasner")) {
    throw std::invalid_argument("FourCodeSpec: expected {krasner, Jprime, L, M, L2}");
  }
  FourCodeSpec s;
  s.krasner = krasner_from_json(j.at("krasner"));
  if (j.contains("Jprime")) s.Jprime = set_from_json(j["Jprime"]);
  if (j.contains("L")) s.L = setmap_from_json(j["L"]);
  if (j.contains("M")) s.M = setmap_from_json(j["M"]);
  if (j.contains("L2")) {
    if (!j["L2"].is_object()) throw std::invalid_argument("L2: expected i -> (l -> set)");
    for (const auto& [k, v] : j["L2"].items()) {
      s.L2[static_cast<uint32_t>(std::stoul(k))] = setmap_from_json(v);
    }
  }
  return s;
}

inline json code_check_to_json(const CodeCheck& c) {
  json out{{"is_code", c.is_code}};
  if (c.witness) {
    json left = json::array(), right = json::array();
    for (const Word& w : c.witness->left) left.push_back(w.str());
    for (const Word& w : c.witness->right) right.push_back(w.str());
    out["witness"] = json{{"word", c.witness->word.str()},
                          {"factorization_a", std::move(left)},
                          {"factorization_b", std::move(right)}};
  }
  return out;
}

inline json hajos_witness_to_json(const HajosWitness& w) {
  return json{{"krasner", krasner_to_json(w.krasner)},
              {"M", set_to_json(w.M)},
              {"L", set_to_json(w.L)}};
}

inline json t2_report_to_json(const T2Report& r) {
  json psets = json::object(), ssets = json::object();
  for (const auto& [w, s] : r.p_sets) psets[w.str()] = set_to_json(s);
  for (const auto& [w, s] : r.s_sets) ssets[w.str()] = set_to_json(s);
  return json{{"sign", r.sign},
              {"p_side", r.p_side},
              {"s_side", r.s_side},
              {"L_p", std::move(psets)},
              {"M_s", std::move(ssets)}};
}

inline json classify_report_to_json(const ClassifyReport& r) {
  json out{{"swapped", r.swapped}, {"l0_case", r.l0_case}, {"sign", r.sign}};
  if (r.m0) {
    json m{{"case", r.m0->case_id}};
    if (r.m0->case_id >= 2) {
      m["krasner"] = krasner_to_json(r.m0->krasner);
      m["Iprime"] = set_to_json(r.m0->Iprime);
      m["L"] = setmap_to_json(r.m0->L);
      m["Jprime"] = set_to_json(r.m0->Jprime);
      m["M"] = setmap_to_json(r.m0->M);
    }
    if (r.m0->case_id == 2) {
      json lw = json::object();
      for (const auto& [w, s] : r.m0->Lw) lw[w.str()] = set_to_json(s);
      m["Lw"] = std::move(lw);
    }
    if (r.m0->case_id == 3) {
      json l2 = json::object();
      for (const auto& [il, s] : r.m0->L2) {
        l2[std::to_string(il.first) + "," + std::to_string(il.second)] = set_to_json(s);
      }
      m["L2"] = std::move(l2);
    }
    out["m0"] = std::move(m);
  }
  return out;
}

inline json error_to_json(const verify_error& e) {
  json ctx = json::object();
  for (const auto& [k, v] : e.context()) ctx[k] = v;
  return json{{"error", {{"tag", e.tag()}, {"message", e.what()}, {"context", std::move(ctx)}}}};
}

}  // namespace codefact::io
