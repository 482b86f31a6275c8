#include <gtest/gtest.h>

#include "ringmpc/errors.hpp"
#include "ringmpc/ring.hpp"

using namespace ringmpc;

namespace {

std::vector<Ring> sample_rings() {
  auto f3 = Ring::integers_mod(3);
  return {Ring::integers_mod(4),  Ring::integers_mod(6),     Ring::integers_mod(20),
          Ring::galois_field(2, 2), Ring::galois_field(3, 2), Ring::galois_field(2, 3),
          Ring::product({f3, f3}), Ring::product({Ring::integers_mod(4), Ring::integers_mod(2)})};
}

}  // namespace

TEST(Ring, Z4Addition) {
  auto z4 = Ring::integers_mod(4);
  EXPECT_EQ(z4.add(3, 3), 2u);
  EXPECT_EQ(z4.neg(1), 3u);
  EXPECT_EQ(z4.from_int(-1), 3u);
}

TEST(Ring, ProductSquare) {
  auto f3 = Ring::integers_mod(3);
  auto r = Ring::product({f3, f3});
  const Elem a = r.parse("(2,2)");
  EXPECT_EQ(r.mul(a, a), r.parse("(1,1)"));
  EXPECT_EQ(r.format(a), "(2,2)");
  EXPECT_EQ(r.size(), 9u);
}

TEST(Ring, GF4Generator) {
  auto gf = Ring::galois_field(2, 2);
  const Elem a = gf.generator();
  EXPECT_EQ(gf.mul(a, gf.mul(a, a)), gf.one());
  EXPECT_EQ(gf.format(a), "alpha");
  EXPECT_EQ(gf.parse("alpha^2"), gf.add(a, gf.one()));
  EXPECT_EQ(gf.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Ring, UnitInverse) {
  auto z20 = Ring::integers_mod(20);
  EXPECT_EQ(z20.inverse(7), std::optional<Elem>(3));
  EXPECT_FALSE(Ring::integers_mod(4).inverse(2).has_value());
  auto f3 = Ring::integers_mod(3);
  auto r = Ring::product({f3, f3});
  EXPECT_EQ(r.inverse(r.parse("(2,2)")), std::optional<Elem>(r.parse("(2,2)")));
}

TEST(Ring, Enumerate) {
  EXPECT_EQ(Ring::integers_mod(4).elements(), (std::vector<Elem>{0, 1, 2, 3}));
  EXPECT_EQ(Ring::galois_field(2, 2).elements().size(), 4u);
  auto f3 = Ring::integers_mod(3);
  EXPECT_EQ(Ring::product({f3, f3}).elements().size(), 9u);
}

TEST(Ring, RejectsBadParameters) {
  EXPECT_THROW(Ring::integers_mod(1), PreconditionError);
  EXPECT_THROW(Ring::galois_field(2, 2, {1, 0, 1}), PreconditionError);  // X^2+1 = (X+1)^2
  EXPECT_THROW(Ring::galois_field(4, 1), PreconditionError);
  EXPECT_THROW(Ring::product({Ring::integers_mod(2)}), PreconditionError);
}

TEST(Ring, AxiomsExhaustive) {
  for (const auto& r : sample_rings()) {
    if (r.size() > 64) continue;
    for (Elem a : r.elements()) {
      EXPECT_EQ(r.mul(r.one(), a), a) << r.name();
      EXPECT_EQ(r.add(0, a), a) << r.name();
      EXPECT_EQ(r.add(a, r.neg(a)), 0u) << r.name();
      for (Elem b : r.elements()) {
        EXPECT_EQ(r.mul(a, b), r.mul(b, a)) << r.name();
        EXPECT_EQ(r.sub(r.add(a, b), b), a) << r.name();
      }
    }
  }
}

TEST(Ring, InverseMatchesEnumeration) {
  for (const auto& r : sample_rings()) {
    for (Elem a : r.elements()) {
      auto inv = r.inverse(a);
      bool any = false;
      for (Elem b : r.elements()) any = any || r.mul(a, b) == r.one();
      EXPECT_EQ(inv.has_value(), any) << r.name() << " " << r.format(a);
      if (inv) EXPECT_EQ(r.mul(a, *inv), r.one());
    }
  }
}

TEST(Ring, FormatParseRoundTrip) {
  for (const auto& r : sample_rings())
    for (Elem a : r.elements()) EXPECT_EQ(r.parse(r.format(a)), a) << r.name();
}

TEST(Ring, LocalDecomposition) {
  for (const auto& r : sample_rings()) {
    for (Elem a : r.elements()) {
      EXPECT_EQ(r.from_local(r.to_local(a)), a) << r.name();
      for (Elem b : r.elements()) {
        const Word la = r.to_local(a), lb = r.to_local(b), lm = r.to_local(r.mul(a, b));
        const auto locals = r.local_factors();
        for (std::size_t i = 0; i < locals.size(); ++i)
          ASSERT_EQ(locals[i].mul(la[i], lb[i]), lm[i]) << r.name();
      }
    }
  }
  EXPECT_EQ(Ring::integers_mod(20).local_factors().size(), 2u);
}

TEST(Ring, ChainStructure) {
  auto z8 = Ring::integers_mod(8);
  EXPECT_TRUE(z8.is_local());
  EXPECT_EQ(z8.nilpotency(), 3u);
  EXPECT_EQ(z8.valuation(4), 2u);
  EXPECT_EQ(z8.valuation(3), 0u);
  EXPECT_EQ(z8.valuation(0), 3u);
  EXPECT_EQ(z8.mul(z8.divide(4, 6), 6), 4u);
}

TEST(Ring, ElementMismatch) {
  RingElement a(Ring::integers_mod(4), 1), b(Ring::integers_mod(5), 1);
  EXPECT_THROW(a + b, RingMismatch);
  EXPECT_EQ((a + a).value(), 2u);
}
