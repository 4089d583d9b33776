#pragma once

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "codefact/errors.hpp"
#include "codefact/integers.hpp"
#include "codefact/ncpoly.hpp"
#include "codefact/word.hpp"

namespace codefact {

/// A finite set of nonempty words, kept sorted in canonical order.
class CodeSpec {
public:
  CodeSpec() = default;

  static CodeSpec from_words(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (const Word& w : words) {
      if (w.is_empty()) throw std::invalid_argument("CodeSpec: the empty word is not allowed");
    }
    CodeSpec c;
    c.words_ = std::move(words);
    return c;
  }

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  CodeSpec reversed() const {
    std::vector<Word> ws;
    ws.reserve(words_.size());
    for (const Word& w : words_) ws.push_back(w.reversed());
    return from_words(std::move(ws));
  }

  bool operator==(const CodeSpec&) const = default;

private:
  std::vector<Word> words_;
};

inline NcPoly char_poly(const CodeSpec& c) {
  NcPoly p;
  for (const Word& w : c.words()) p += NcPoly::monomial(w);
  return p;
}

/// A word with two distinct factorizations into codewords.
struct AmbiguityWitness {
  Word word;
  std::vector<Word> left;
  std::vector<Word> right;
};

struct CodeCheck {
  bool is_code = false;
  std::optional<AmbiguityWitness> witness;
};

namespace detail {

struct SpDerivation {
  enum class Kind { root, extend_codeword, extend_remainder } kind;
  Word parent;    // remainder this one was derived from (non-root)
  Word codeword;  // codeword used in the step
  Word other;     // root only: the longer codeword
};

}  // namespace detail

/// Sardinas-Patterson decision procedure. Remainder sets are explored to the
/// fixpoint (every remainder is visited once, so cycles terminate), and a
/// negative answer is certified: the witness is rebuilt by backtracking the
/// remainder derivation and re-checked by concatenation.
inline CodeCheck sardinas_patterson(const CodeSpec& code) {
  using detail::SpDerivation;
  std::map<Word, SpDerivation> seen;
  std::deque<Word> queue;

  auto visit = [&](const Word& u, SpDerivation d) {
    if (seen.emplace(u, std::move(d)).second) queue.push_back(u);
  };

  const auto& words = code.words();
  for (const Word& c : words) {
    for (const Word& cp : words) {
      if (c == cp) continue;
      if (auto u = cp.strip_prefix(c)) {
        visit(*u, SpDerivation{SpDerivation::Kind::root, Word(), c, cp});
      }
    }
  }

  std::optional<Word> reached_empty;
  while (!queue.empty() && !reached_empty) {
    Word u = queue.front();
    queue.pop_front();
    if (u.is_empty()) {
      reached_empty = u;
      break;
    }
    for (const Word& c : words) {
      if (auto v = c.strip_prefix(u)) {
        visit(*v, SpDerivation{SpDerivation::Kind::extend_codeword, u, c, Word()});
      }
      if (auto v = u.strip_prefix(c)) {
        visit(*v, SpDerivation{SpDerivation::Kind::extend_remainder, u, c, Word()});
      }
    }
  }

  if (!reached_empty) return CodeCheck{true, std::nullopt};

  // Backtrack to the root, then replay forward keeping the invariant
  // word(left) = word(right) . remainder.
  std::vector<SpDerivation> steps;
  Word cur = *reached_empty;
  for (;;) {
    const SpDerivation& d = seen.at(cur);
    if (d.kind == SpDerivation::Kind::root) {
      steps.push_back(d);
      break;
    }
    steps.push_back(d);
    cur = d.parent;
  }

  std::vector<Word> left{steps.back().other};
  std::vector<Word> right{steps.back().codeword};
  for (auto it = steps.rbegin() + 1; it != steps.rend(); ++it) {
    if (it->kind == SpDerivation::Kind::extend_codeword) {
      right.push_back(it->codeword);
      std::swap(left, right);
    } else {
      right.push_back(it->codeword);
    }
  }

  Word wl, wr;
  for (const Word& w : left) wl = wl.concat(w);
  for (const Word& w : right) wr = wr.concat(w);
  if (wl != wr || left == right) {
    throw std::logic_error("sardinas_patterson: witness reconstruction failed");
  }
  return CodeCheck{false, AmbiguityWitness{wl, std::move(left), std::move(right)}};
}

/// Sum of 2^(-|w|) over the code, as an exact rational.
inline Rat kraft_sum(const CodeSpec& code) {
  Rat sum = 0;
  for (const Word& w : code.words()) {
    sum += Rat(Int(1), Int(1) << w.length());
  }
  return sum;
}

/// A finite code is maximal iff it is a code and its Kraft sum is exactly 1
/// (finite codes are thin, so completeness and maximality coincide).
inline bool is_maximal_code(const CodeSpec& code) {
  return sardinas_patterson(code).is_code && kraft_sum(code) == 1;
}

/// Materializes the code with characteristic polynomial P(A-1)S + 1.
/// Fails with "NonCharacteristic" when some coefficient falls outside {0,1}
/// and with "EmptyWordPresent" when the empty word ends up in the support.
inline CodeSpec code_from_factorization(const NcPoly& P, const NcPoly& S) {
  NcPoly c = P * NcPoly::alphabet_minus_one() * S + NcPoly::one();
  for (const auto& [w, coeff] : c.terms()) {
    if (coeff != 1) {
      throw verify_error("NonCharacteristic",
                         "coefficient of " + w.str() + " is " + coeff.str(),
                         {{"word", w.str()}, {"coefficient", coeff.str()}});
    }
  }
  if (c.contains(Word())) {
    throw verify_error("EmptyWordPresent", "the empty word has coefficient 1");
  }
  return CodeSpec::from_words(c.support());
}

}  // namespace codefact
