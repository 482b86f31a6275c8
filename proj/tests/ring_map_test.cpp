#include <gtest/gtest.h>

#include "ringmpc/errors.hpp"
#include "ringmpc/ring_map.hpp"
#include "test_util.hpp"

using namespace ringmpc;

TEST(RingMap, SwapOnProduct) {
  auto r = testutil::f3xf3();
  auto s = RingMap::permute_components(r, {1, 0});
  EXPECT_EQ(s(r.parse("(1,2)")), r.parse("(2,1)"));
  EXPECT_TRUE(s.is_bijective());
  EXPECT_TRUE(s.power(2).is_identity());
}

TEST(RingMap, FrobeniusGF4) {
  auto gf = Ring::galois_field(2, 2);
  auto s = RingMap::frobenius(gf);
  EXPECT_EQ(s(gf.generator()), gf.parse("alpha^2"));
  EXPECT_TRUE(s.power(2).is_identity());
  auto gf8 = Ring::galois_field(2, 3);
  EXPECT_TRUE(RingMap::frobenius(gf8).power(3).is_identity());
  EXPECT_FALSE(RingMap::frobenius(gf8).power(2).is_identity());
}

TEST(RingMap, DoublingIsNotAnEndomorphism) {
  auto z4 = Ring::integers_mod(4);
  EXPECT_THROW(RingMap::endomorphism_from_table(z4, {0, 2, 0, 2}), AxiomViolation);
}

TEST(RingMap, ViolationNamesPair) {
  auto z4 = Ring::integers_mod(4);
  try {
    RingMap::endomorphism_from_table(z4, {0, 1, 2, 1});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_NE(std::string(e.what()).find("("), std::string::npos);
  }
}

TEST(RingMap, ZeroDerivationAlwaysValid) {
  auto r = testutil::f3xf3();
  for (auto s : {RingMap::identity(r), RingMap::permute_components(r, {1, 0})}) {
    auto d = RingMap::zero_derivation(s);
    EXPECT_TRUE(d.is_zero());
  }
}

TEST(RingMap, InnerDerivationLeibniz) {
  auto gf = Ring::galois_field(2, 2);
  auto s = RingMap::frobenius(gf);
  auto d = RingMap::inner_derivation(s, gf.generator());
  for (Elem a : gf.elements())
    for (Elem b : gf.elements())
      EXPECT_EQ(d(gf.mul(a, b)), gf.add(gf.mul(s(a), d(b)), gf.mul(d(a), b)));
}

TEST(RingMap, BadDerivationTable) {
  auto z4 = Ring::integers_mod(4);
  auto id = RingMap::identity(z4);
  // delta(1) must be 0.
  EXPECT_THROW(RingMap::derivation_from_table(id, {0, 1, 2, 3}), AxiomViolation);
}

TEST(RingMap, CompositionStaysValid) {
  auto gf = Ring::galois_field(3, 2);
  auto s = RingMap::frobenius(gf);
  for (unsigned k = 0; k < 5; ++k) EXPECT_EQ(s.power(k).role(), MapRole::Endomorphism);
  auto inv = s.inverse();
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE(s.compose(*inv).is_identity());
}
