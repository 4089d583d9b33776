#include <gtest/gtest.h>

#include "codefact/ncpoly.hpp"
#include "codefact/word.hpp"
#include "support.hpp"

using namespace codefact;
using testsupport::Rng;

namespace {

NcPoly A(const IndexSet& s) { return to_ncpoly(ExpPoly::from_exponents(s)); }
NcPoly B() { return NcPoly::letter_b(); }
IndexSet iv(uint32_t lo, uint32_t hi) { return testsupport::interval(lo, hi); }

}  // namespace

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(Word().str(), "1");
  EXPECT_EQ(Word::parse("1"), Word());
  EXPECT_EQ(Word::parse("aabaa").runs(), (std::vector<uint32_t>{2, 2}));
  EXPECT_EQ(Word::parse("b").runs(), (std::vector<uint32_t>{0, 0}));
  EXPECT_EQ(Word::parse("aabaa").str(), "aabaa");
  EXPECT_EQ(Word::parse("bb").b_count(), 2u);
  EXPECT_EQ(Word::parse("aabab").length(), 5u);
  EXPECT_THROW(Word::parse(""), std::invalid_argument);
  EXPECT_THROW(Word::parse("abc"), std::invalid_argument);
}

TEST(Word, CanonicalOrder) {
  // length first, then b-count, then runs lexicographically
  EXPECT_LT(Word::parse("aa"), Word::parse("aaa"));
  EXPECT_LT(Word::parse("aaa"), Word::parse("aab"));  // same length, fewer b's first
  EXPECT_LT(Word::parse("ba"), Word::parse("ab"));    // lex on runs: [0,1] < [1,0]
  EXPECT_LT(Word(), Word::parse("a"));
}

TEST(Word, ConcatSplitReverse) {
  Word w = Word::parse("aab") * Word::parse("ab");
  EXPECT_EQ(w.str(), "aabab");
  auto [prefix, last] = w.split_last_b();
  EXPECT_EQ(prefix.str(), "aaba");
  EXPECT_EQ(last, 0u);
  auto [first, suffix] = w.split_first_b();
  EXPECT_EQ(first, 2u);
  EXPECT_EQ(suffix.str(), "ab");
  EXPECT_EQ(w.reversed().str(), "babaa");

  EXPECT_EQ(*w.strip_prefix(Word::parse("aab")), Word::parse("ab"));
  EXPECT_EQ(*w.strip_prefix(Word::parse("a")), Word::parse("abab"));
  EXPECT_FALSE(w.strip_prefix(Word::parse("ab")).has_value());
  EXPECT_EQ(*w.strip_prefix(w), Word());
}

TEST(Word, ReversalInvolution) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Word w = rng.word(4, 5);
    EXPECT_EQ(w.reversed().reversed(), w);
    EXPECT_EQ(w.reversed().length(), w.length());
    EXPECT_EQ(w.reversed().b_count(), w.b_count());
  }
}

TEST(NcPoly, AddIdentityAndCancellation) {
  Rng rng(12);
  NcPoly p = rng.ncpoly(6, 2, 4, true);
  EXPECT_EQ(p + NcPoly::zero(), p);
  // 1 + a - a = 1
  NcPoly q = NcPoly::one() + NcPoly::letter_a() - NcPoly::letter_a();
  EXPECT_EQ(q, NcPoly::one());
  EXPECT_TRUE((p - p).is_zero());
}

TEST(NcPoly, AddDisjointLayerPieces) {
  // the two-b pieces of the ex1 code combine without interaction
  NcPoly left = B() * A({0, 1}) * B() * A(iv(0, 4));
  NcPoly right = A({2}) * B() * A({2, 4, 5, 6, 7, 8}) * B() * A(iv(0, 4));
  NcPoly sum = left + right;
  EXPECT_EQ(sum.term_count(), left.term_count() + right.term_count());
  EXPECT_TRUE(sum.is_characteristic());
}

TEST(NcPoly, MulTelescopesAndHasIdentity) {
  // (a - 1) a^{0..4} = a^5 - 1
  NcPoly am1 = NcPoly::letter_a() - NcPoly::one();
  EXPECT_EQ(am1 * A(iv(0, 4)), A({5}) - NcPoly::one());

  Rng rng(13);
  NcPoly p = rng.ncpoly(6, 2, 4, true);
  EXPECT_EQ(NcPoly::one() * p, p);
  EXPECT_EQ(p * NcPoly::one(), p);

  // a^2 b a^{0..6} (a-1) a^{0..4} = a^2 b a^{7..11} - a^2 b a^{0..4}
  NcPoly lhs = A({2}) * B() * A(iv(0, 6)) * am1 * A(iv(0, 4));
  EXPECT_EQ(lhs, A({2}) * B() * A(iv(7, 11)) - A({2}) * B() * A(iv(0, 4)));
}

TEST(NcPoly, NonCommutative) {
  NcPoly ab = NcPoly::letter_a() * NcPoly::letter_b();
  NcPoly ba = NcPoly::letter_b() * NcPoly::letter_a();
  EXPECT_NE(ab, ba);
}

TEST(NcPoly, RingAxioms) {
  Rng rng(14);
  for (int t = 0; t < 30; ++t) {
    NcPoly p = rng.ncpoly(4, 2, 3, true);
    NcPoly q = rng.ncpoly(4, 2, 3, true);
    NcPoly r = rng.ncpoly(4, 2, 3, true);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p + q) * r, p * r + q * r);
  }
}

TEST(NcPoly, BLayers) {
  NcPoly pex1 = NcPoly::one() + A({2}) * B() * A(iv(0, 6)) +
                A({2}) * B() * A({3}) * B() * A(iv(0, 6));
  EXPECT_EQ(pex1.b_layer(1), A({2}) * B() * A(iv(0, 6)));
  EXPECT_TRUE(pex1.b_layer(7).is_zero());
  NcPoly sex1 = A(iv(0, 4)) + A({0, 1}) * B() * A(iv(0, 4));
  EXPECT_EQ(sex1.b_layer(0), A(iv(0, 4)));

  Rng rng(15);
  for (int t = 0; t < 30; ++t) {
    NcPoly p = rng.ncpoly(8, 3, 3, true);
    NcPoly sum;
    for (std::size_t g = 0; g <= p.max_b_count(); ++g) sum += p.b_layer(g);
    EXPECT_EQ(sum, p);
  }
}

TEST(NcPoly, BLayerOfProduct) {
  // (PQ)_r = sum_{i+j=r} P_i Q_j
  Rng rng(16);
  for (int t = 0; t < 25; ++t) {
    NcPoly p = rng.ncpoly(5, 2, 3, true);
    NcPoly q = rng.ncpoly(5, 2, 3, true);
    NcPoly prod = p * q;
    for (std::size_t r = 0; r <= p.max_b_count() + q.max_b_count(); ++r) {
      NcPoly expect;
      for (std::size_t i = 0; i <= r && i <= p.max_b_count(); ++i) {
        if (r - i <= q.max_b_count()) expect += p.b_layer(i) * q.b_layer(r - i);
      }
      EXPECT_EQ(prod.b_layer(r), expect);
    }
  }
}

TEST(NcPoly, Reversal) {
  EXPECT_EQ(NcPoly::monomial(Word::parse("aabaaa")).reversed(),
            NcPoly::monomial(Word::parse("aaabaa")));
  NcPoly sex1 = A(iv(0, 4)) + A({0, 1}) * B() * A(iv(0, 4));
  EXPECT_EQ(sex1.reversed(), A(iv(0, 4)) + A(iv(0, 4)) * B() * A({0, 1}));

  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    NcPoly p = rng.ncpoly(5, 2, 3, true);
    NcPoly q = rng.ncpoly(5, 2, 3, true);
    EXPECT_EQ((p + q).reversed(), p.reversed() + q.reversed());
    EXPECT_EQ((p * q).reversed(), q.reversed() * p.reversed());
    EXPECT_EQ(p.reversed().reversed(), p);
  }
}

TEST(NcPoly, CharacteristicAndNonneg) {
  NcPoly minus_one = -NcPoly::one();
  EXPECT_FALSE(minus_one.is_nonneg());
  NcPoly two_three = Int(2) * NcPoly::one() + Int(3) * NcPoly::letter_a();
  EXPECT_FALSE(two_three.is_characteristic());
  EXPECT_TRUE(two_three.is_nonneg());
  EXPECT_TRUE(NcPoly::zero().is_characteristic());
}

TEST(NcPoly, ExpPolyBridge) {
  ExpPoly h = ExpPoly::from_exponents({0, 0, 1, 1, 1, 3, 4});
  EXPECT_EQ(h.coeff(0), 2);
  EXPECT_EQ(h.coeff(1), 3);
  NcPoly p = to_ncpoly(h);
  EXPECT_EQ(to_exppoly(p), h);
  EXPECT_THROW(to_exppoly(NcPoly::letter_b()), std::invalid_argument);
}

TEST(NcPoly, BigCoefficients) {
  // products stack multiplicities without overflow
  NcPoly p = NcPoly::monomial(Word::parse("a"), Int("123456789012345678901234567890"));
  NcPoly sq = p * p;
  EXPECT_EQ(sq.coeff(Word::parse("aa")),
            Int("123456789012345678901234567890") * Int("123456789012345678901234567890"));
}
