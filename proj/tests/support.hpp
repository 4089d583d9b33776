#pragma once

// Shared test machinery: a platform-deterministic RNG, random value
// generators, and the generated-instance corpus used by the property and
// soundness sweeps. Everything here is test-side and independent of the
// library internals it exercises.

#include <cstdint>
#include <random>
#include <vector>

#include "codefact/codefact.hpp"

namespace testsupport {

using namespace codefact;

/// mt19937_64 has a standardized sequence; bounded draws use plain modulo so
/// results are identical on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }
  uint32_t below(uint32_t n) { return n == 0 ? 0 : static_cast<uint32_t>(eng_() % n); }
  uint32_t range(uint32_t lo, uint32_t hi) { return lo + below(hi - lo + 1); }
  bool percent(uint32_t p) { return below(100) < p; }

  /// Subset of {0..hi} keeping each element with probability p/100.
  IndexSet subset(uint32_t hi, uint32_t p) {
    IndexSet s;
    for (uint32_t x = 0; x <= hi; ++x) {
      if (percent(p)) s.push_back(x);
    }
    return s;
  }

  /// Subset of {0..hi} with at most max_size elements.
  IndexSet small_subset(uint32_t hi, uint32_t max_size) {
    IndexSet s;
    const uint32_t size = below(max_size + 1);
    for (uint32_t t = 0; t < size; ++t) s.push_back(below(hi + 1));
    return normalized_set(std::move(s));
  }

  Word word(uint32_t max_bs, uint32_t max_run) {
    std::vector<uint32_t> runs;
    const uint32_t bs = below(max_bs + 1);
    for (uint32_t i = 0; i <= bs; ++i) runs.push_back(below(max_run + 1));
    return Word::from_runs(std::move(runs));
  }

  NcPoly ncpoly(uint32_t terms, uint32_t max_bs, uint32_t max_run, bool allow_negative) {
    NcPoly p;
    for (uint32_t t = 0; t < terms; ++t) {
      int64_t c = 1 + below(3);
      if (allow_negative && percent(40)) c = -c;
      p += NcPoly::monomial(word(max_bs, max_run), Int(c));
    }
    return p;
  }

  ExpPoly exppoly(uint32_t terms, uint32_t max_exp, bool allow_negative) {
    ExpPoly p;
    for (uint32_t t = 0; t < terms; ++t) {
      int64_t c = 1 + below(3);
      if (allow_negative && percent(40)) c = -c;
      p += ExpPoly::monomial(below(max_exp + 1), Int(c));
    }
    return p;
  }

private:
  std::mt19937_64 eng_;
};

inline IndexSet interval(uint32_t lo, uint32_t hi) {
  IndexSet s;
  for (uint32_t x = lo; x <= hi; ++x) s.push_back(x);
  return s;
}

/// A random M_w satisfying the tower condition a^(M_w)(a-1)a^I + a^I >= 0;
/// random subsets are tried first and the always-valid interval {0..r} is the
/// fallback.
inline IndexSet random_tower_mset(Rng& rng, const IndexSet& I, uint32_t hi) {
  const ExpPoly ai = set_poly(I);
  const ExpPoly am1 = ExpPoly::a_minus_one();
  for (int attempt = 0; attempt < 6; ++attempt) {
    IndexSet m = rng.small_subset(hi, 3);
    if ((set_poly(m) * am1 * ai + ai).is_nonneg()) return m;
  }
  return interval(0, rng.below(hi));
}

/// One verified factorization plus how it was produced.
struct CorpusEntry {
  FactorizationPair pair;
  uint32_t n = 0;
  std::string origin;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  uint64_t rejected = 0;  // candidate specs the checkers refused
};

/// Generates verified positive factorizations for every Krasner pair of each
/// Z_n, n in [n_lo, n_hi]: seeds, random towers, 3-code specs (random and
/// guaranteed-interval families), teoC extensions of the towers, and 4-code
/// interval/random specs. Rejected candidates are counted, not kept.
inline Corpus build_corpus(uint32_t n_lo, uint32_t n_hi, uint64_t seed) {
  Rng rng(seed);
  Corpus out;
  auto keep = [&](FactorizationPair f, uint32_t n, const char* origin) {
    out.entries.push_back(CorpusEntry{std::move(f), n, origin});
  };

  for (uint32_t n = n_lo; n <= n_hi; ++n) {
    for (const auto& k : enumerate_krasner(n)) {
      const uint32_t hi = 2 * n;
      keep(krasner_seed(k), n, "seed");

      std::vector<FactorizationPair> towers;
      for (int t = 0; t < 6; ++t) {
        const uint32_t depth = 1 + rng.below(2);
        std::vector<std::map<Word, IndexSet>> levels;
        FactorizationPair f = krasner_seed(k);
        NcPoly prev = f.S;
        for (uint32_t d = 0; d < depth; ++d) {
          std::map<Word, IndexSet> level;
          for (const auto& [w, c] : prev.terms()) {
            if (rng.percent(60)) level[w] = random_tower_mset(rng, k.I, hi);
          }
          levels.push_back(level);
          NcPoly next;
          for (const auto& [w, s] : levels.back()) {
            next += to_ncpoly(set_poly(s)) * NcPoly::letter_b() * NcPoly::monomial(w);
          }
          prev = next;
          if (prev.is_zero()) break;
        }
        FactorizationPair built = build_tower(k, levels);
        if (built.S.max_b_count() == 1) towers.push_back(built);
        keep(std::move(built), n, "tower");
      }

      // 3-code specs: a guaranteed family (I' subset of I, L_i = {0..n-1},
      // M_j empty) and random draws filtered by the checker.
      {
        ThreeCodeSpec spec;
        spec.krasner = k;
        for (uint32_t i : k.I) {
          if (spec.Iprime.size() < 2) {
            spec.Iprime.push_back(i);
            spec.L[i] = interval(0, n - 1);
          }
        }
        keep(check_3code(spec), n, "3code-interval");
      }
      for (int t = 0; t < 8; ++t) {
        ThreeCodeSpec spec;
        spec.krasner = k;
        spec.Iprime = rng.small_subset(hi, 2);
        for (uint32_t i : spec.Iprime) spec.L[i] = rng.small_subset(hi, 3);
        for (uint32_t j : k.J) {
          if (rng.percent(50)) spec.M[j] = random_tower_mset(rng, k.I, hi);
        }
        try {
          keep(check_3code(spec), n, "3code-random");
        } catch (const verify_error&) {
          ++out.rejected;
        }
      }

      // teoC extensions of the seed (always extensible with intervals) and of
      // the sampled towers (candidate pools, rejection counted).
      {
        FactorizationPair base = krasner_seed(k);
        TeocExtension ext{base, {}};
        const auto layers = layer_decompose(base);
        for (const auto& [w, c] : layers[1].terms()) {
          auto [z, j] = w.split_last_b();
          if (ext.Lext.size() < 2) ext.Lext[z] = interval(0, rng.below(n));
        }
        keep(teoc_extend(ext), n, "teoc-seed");
      }
      for (const auto& base : towers) {
        const auto layers = layer_decompose(base);
        const std::size_t kk = base.P.max_b_count();
        std::vector<Word> q;
        for (const auto& [w, c] : layers[kk + 1].terms()) {
          auto [z, j] = w.split_last_b();
          if (q.empty() || q.back() != z) q.push_back(z);
        }
        if (q.empty()) continue;
        bool extended = false;
        for (int attempt = 0; attempt < 8 && !extended; ++attempt) {
          TeocExtension ext{base, {}};
          ext.Lext[q[rng.below(static_cast<uint32_t>(q.size()))]] =
              rng.percent(50) ? rng.small_subset(hi, 3) : interval(0, rng.below(n));
          if (ext.Lext.begin()->second.empty()) continue;
          try {
            keep(teoc_extend(ext), n, "teoc-tower");
            extended = true;
          } catch (const verify_error&) {
            ++out.rejected;
          }
        }
      }

      // 4-code specs: the all-interval family is always accepted; random
      // draws exercise the rejection paths.
      {
        // Interval parameters make every equation telescope, so this family
        // is always accepted: R_i = a^(J + r + 1), J' = J + r + 1, I_j = I.
        FourCodeSpec spec;
        spec.krasner = k;
        const uint32_t r = rng.below(n), s = rng.below(n), t = rng.below(n);
        for (uint32_t j : k.J) spec.Jprime.push_back(j + r + 1);
        for (uint32_t i : k.I) {
          spec.L[i] = interval(0, r);
          for (uint32_t l : spec.L[i]) spec.L2[i][l] = interval(0, t);
        }
        for (uint32_t j : spec.Jprime) spec.M[j] = interval(0, s);
        keep(check_4code_item3(spec), n, "4code-interval");
      }
      for (int t = 0; t < 4; ++t) {
        FourCodeSpec spec;
        spec.krasner = k;
        spec.Jprime = rng.small_subset(hi, 2);
        for (uint32_t j : spec.Jprime) spec.M[j] = rng.small_subset(hi, 2);
        for (uint32_t i : k.I) {
          spec.L[i] = rng.small_subset(hi, 2);
          for (uint32_t l : spec.L[i]) spec.L2[i][l] = rng.small_subset(hi, 2);
        }
        try {
          keep(check_4code_item3(spec), n, "4code-random");
        } catch (const verify_error&) {
          ++out.rejected;
        }
      }
    }
  }
  return out;
}

}  // namespace testsupport
