#include <gtest/gtest.h>

#include "codefact/fixtures.hpp"
#include "codefact/io.hpp"
#include "support.hpp"

using namespace codefact;
using nlohmann::json;
using testsupport::Rng;

TEST(Io, WordRoundTrip) {
  for (const char* s : {"1", "a", "b", "aabab", "bbb", "aaaa"}) {
    EXPECT_EQ(io::word_from_json(io::word_to_json(Word::parse(s))), Word::parse(s));
  }
}

TEST(Io, IntegerEncoding) {
  EXPECT_EQ(io::int_to_json(Int(42)), json(42));
  EXPECT_EQ(io::int_from_json(json(-7)), Int(-7));
  const Int big = Int(1) << 80;
  const json encoded = io::int_to_json(big);
  EXPECT_TRUE(encoded.is_string());
  EXPECT_EQ(io::int_from_json(encoded), big);
  EXPECT_THROW(io::int_from_json(json(1.5)), std::invalid_argument);
}

TEST(Io, NcPolyRoundTripAndCanonicalOrder) {
  Rng rng(81);
  for (int t = 0; t < 30; ++t) {
    const NcPoly p = rng.ncpoly(8, 3, 4, true);
    EXPECT_EQ(io::ncpoly_from_json(io::ncpoly_to_json(p)), p);
  }
  // canonical term order: length, then b-count, then runs
  const NcPoly p = NcPoly::monomial(Word::parse("ba")) + NcPoly::monomial(Word::parse("ab")) +
                   NcPoly::monomial(Word::parse("aaa")) + NcPoly::one();
  const json j = io::ncpoly_to_json(p);
  ASSERT_EQ(j["terms"].size(), 4u);
  EXPECT_EQ(j["terms"][0][0], "1");
  EXPECT_EQ(j["terms"][1][0], "ba");
  EXPECT_EQ(j["terms"][2][0], "ab");
  EXPECT_EQ(j["terms"][3][0], "aaa");

  const NcPoly big = NcPoly::monomial(Word::parse("ab"), Int(1) << 90);
  EXPECT_EQ(io::ncpoly_from_json(io::ncpoly_to_json(big)), big);
}

TEST(Io, ExpPolyRoundTrip) {
  Rng rng(82);
  for (int t = 0; t < 30; ++t) {
    const ExpPoly p = rng.exppoly(8, 20, true);
    EXPECT_EQ(io::exppoly_from_json(io::exppoly_to_json(p)), p);
  }
  const json j = io::exppoly_to_json(ExpPoly::from_exponents({0, 0, 3}));
  EXPECT_EQ(j["coeffs"][0][0], 0);
  EXPECT_EQ(j["coeffs"][0][1], 2);
}

TEST(Io, CodeAndPairRoundTrip) {
  const auto f = fixtures::ex1_pair();
  EXPECT_EQ(io::pair_from_json(io::pair_to_json(f)), f);
  const CodeSpec code = code_from_factorization(f.P, f.S);
  EXPECT_EQ(io::code_from_json(io::code_to_json(code)), code);
}

TEST(Io, SpecRoundTrips) {
  const auto three = fixtures::ex1_three_code_spec();
  const auto three2 = io::three_code_spec_from_json(io::three_code_spec_to_json(three));
  EXPECT_EQ(three2.krasner.I, three.krasner.I);
  EXPECT_EQ(three2.Iprime, three.Iprime);
  EXPECT_EQ(three2.L, three.L);
  EXPECT_EQ(three2.M, three.M);

  const auto four = fixtures::sic_spec();
  const auto four2 = io::four_code_spec_from_json(io::four_code_spec_to_json(four));
  EXPECT_EQ(four2.Jprime, four.Jprime);
  EXPECT_EQ(four2.L, four.L);
  EXPECT_EQ(four2.L2, four.L2);
  EXPECT_EQ(check_4code_item3(four2), check_4code_item3(four));

  TeocExtension ext{fixtures::ex1_pair(), {{Word::parse("aabaaa"), {0, 1, 2}}}};
  const auto ext2 = io::teoc_extension_from_json(io::teoc_extension_to_json(ext));
  EXPECT_EQ(ext2.base, ext.base);
  EXPECT_EQ(ext2.Lext, ext.Lext);
}

TEST(Io, RationalsAreExactStrings) {
  EXPECT_EQ(io::rat_to_string(Rat(1)), "1/1");
  EXPECT_EQ(io::rat_to_string(Rat(3, 4)), "3/4");
  EXPECT_EQ(io::rat_to_string(Rat(1, Int(1) << 70)), "1/1180591620717411303424");
}

TEST(Io, DeterministicDump) {
  const auto f = fixtures::ex1_pair();
  const std::string once = io::pair_to_json(f).dump();
  const std::string twice = io::pair_to_json(io::pair_from_json(io::pair_to_json(f))).dump();
  EXPECT_EQ(once, twice);
}

TEST(Io, MalformedInputs) {
  EXPECT_THROW(io::ncpoly_from_json(json{{"terms", 3}}), std::invalid_argument);
  EXPECT_THROW(io::code_from_json(json::object()), std::invalid_argument);
  EXPECT_THROW(io::set_from_json(json{1, -2}), std::invalid_argument);
  EXPECT_THROW(io::word_from_json(json(12)), std::invalid_argument);
}
