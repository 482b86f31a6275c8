#include <gtest/gtest.h>

#include <random>

#include "ringmpc/errors.hpp"
#include "ringmpc/skew_poly.hpp"
#include "test_util.hpp"

using namespace ringmpc;
using testutil::mat;

namespace {

SkewContextPtr ex_context() {
  auto r = testutil::f3xf3();
  return SkewContext::create(RingMap::permute_components(r, {1, 0}));
}

SkewContextPtr gf4_frobenius() {
  return SkewContext::create(RingMap::frobenius(Ring::galois_field(2, 2)));
}

SkewContextPtr gf4_identity() {
  return SkewContext::create(RingMap::identity(Ring::galois_field(2, 2)));
}

SkewPoly P(const SkewContextPtr& c, const char* text) {
  return SkewPoly::parse(c, text, [&](std::string_view n) -> std::optional<Elem> {
    if (n == "a" && c->ring().kind() == RingKind::Product) return c->ring().parse("(2,2)");
    return std::nullopt;
  });
}

SkewPoly random_poly(const SkewContextPtr& c, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(c->ring().size() - 1));
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  Word w(len(rng));
  for (auto& e : w) e = pick(rng);
  return SkewPoly(c, w);
}

SkewPoly random_monic(const SkewContextPtr& c, std::size_t deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(c->ring().size() - 1));
  Word w(deg + 1);
  for (auto& e : w) e = pick(rng);
  w[deg] = c->ring().one();
  return SkewPoly(c, w);
}

std::vector<SkewContextPtr> all_contexts() {
  auto gf = Ring::galois_field(2, 2);
  auto fr = RingMap::frobenius(gf);
  auto z4 = Ring::integers_mod(4);
  auto r = testutil::f3xf3();
  auto swap = RingMap::permute_components(r, {1, 0});
  return {ex_context(),
          gf4_frobenius(),
          gf4_identity(),
          SkewContext::create(fr, RingMap::inner_derivation(fr, gf.generator())),
          SkewContext::create(RingMap::identity(z4)),
          SkewContext::create(swap, RingMap::inner_derivation(swap, r.parse("(1,0)")))};
}

}  // namespace

TEST(SkewPoly, ExProduct) {
  auto c = ex_context();
  EXPECT_EQ(P(c, "X^2 + X + a") * P(c, "X^2 + a X + a"), P(c, "X^4 + 1"));
}

TEST(SkewPoly, Gf4Step1Product) {
  auto c = gf4_frobenius();
  auto g = P(c, "X^2 + alpha"), h = P(c, "X^2 + alpha^2"), f = P(c, "X^4 + X^2 + 1");
  EXPECT_EQ(g * h, f);
  EXPECT_EQ(h * g, f);
  auto one = SkewPoly::constant(c, 1);
  EXPECT_EQ(one * g, g);
}

TEST(SkewPoly, CommutationRule) {
  auto c = gf4_frobenius();
  // X alpha = alpha^2 X
  EXPECT_EQ(P(c, "X alpha"), P(c, "alpha^2 X"));
  auto d = all_contexts()[3];
  const Elem a = d->ring().generator();
  auto lhs = SkewPoly::x(d) * SkewPoly::constant(d, a);
  Word expect{d->delta()(a), d->sigma()(a)};
  EXPECT_EQ(lhs.coefficients(), expect);
}

TEST(SkewPoly, FormatRoundTrip) {
  auto c = ex_context();
  auto p = P(c, "X^4 + (2,2)X + 1");
  EXPECT_EQ(p.to_string(), "X^4 + (2,2)*X + (1,1)");
  EXPECT_EQ(P(c, p.to_string().c_str()), p);
  auto g = gf4_frobenius();
  auto q = P(g, "alpha^2 X^3 + X");
  EXPECT_EQ(SkewPoly::parse(g, q.to_string()), q);
}

TEST(SkewPoly, ContextMismatch) {
  auto a = gf4_frobenius(), b = gf4_frobenius();
  EXPECT_THROW(SkewPoly::x(a) + SkewPoly::x(b), RingMismatch);
}

TEST(SkewDivision, Examples) {
  auto c = ex_context();
  auto r = right_divmod(P(c, "X^4 + 1"), P(c, "X^2 + a X + a"));
  EXPECT_EQ(r.quotient, P(c, "X^2 + X + a"));
  EXPECT_TRUE(r.remainder.is_zero());
  auto l = left_divmod(P(c, "X^4 + 1"), P(c, "X^2 + X + a"));
  EXPECT_EQ(l.quotient, P(c, "X^2 + a X + a"));
  EXPECT_TRUE(l.remainder.is_zero());
  auto p = P(c, "X^3 + a");
  auto self = right_divmod(p, p);
  EXPECT_EQ(self.quotient, SkewPoly::constant(c, c->ring().one()));
  EXPECT_TRUE(self.remainder.is_zero());
  auto g = gf4_frobenius();
  auto lg = left_divmod(P(g, "X^4 + X^2 + 1"), P(g, "X^2 + alpha^2"));
  EXPECT_TRUE(lg.remainder.is_zero());
  EXPECT_THROW(right_divmod(p, P(c, "a X")), PreconditionError);
}

TEST(SkewDivision, LeftNeedsAutomorphism) {
  auto z4 = Ring::integers_mod(4);
  auto z2x2 = Ring::product({Ring::integers_mod(2), Ring::integers_mod(2)});
  // (x, y) -> (x, x) is an endomorphism but not bijective.
  std::vector<Elem> table;
  for (Elem e : z2x2.elements()) {
    auto comps = z2x2.components(e);
    Elem v[2] = {comps[0], comps[0]};
    table.push_back(z2x2.from_components(v));
  }
  auto c = SkewContext::create(RingMap::endomorphism_from_table(z2x2, table));
  EXPECT_FALSE(c->sigma_invertible());
  EXPECT_THROW(left_divmod(SkewPoly::x(c), SkewPoly::x(c)), PreconditionError);
  (void)z4;
}

TEST(SkewDivision, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  int count = 0;
  for (const auto& c : all_contexts()) {
    for (int it = 0; it < 200; ++it, ++count) {
      const std::size_t d = 1 + it % 4;
      auto g = random_monic(c, d, rng);
      auto q = random_poly(c, 4, rng);
      auto r = random_poly(c, d - 1, rng);
      auto res = right_divmod(q * g + r, g);
      ASSERT_EQ(res.quotient, q) << c->name();
      ASSERT_EQ(res.remainder, r);
      if (c->sigma_invertible()) {
        auto l = left_divmod(g * q + r, g);
        ASSERT_EQ(l.quotient, q);
        ASSERT_EQ(l.remainder, r);
      }
    }
  }
  EXPECT_GE(count, 1000);
}

TEST(SkewPoly, Associativity) {
  std::mt19937_64 rng(5);
  for (const auto& c : all_contexts()) {
    for (int it = 0; it < 60; ++it) {
      auto p = random_poly(c, 4, rng), q = random_poly(c, 4, rng), r = random_poly(c, 4, rng);
      EXPECT_EQ((p * q) * r, p * (q * r));
      EXPECT_EQ(p * (q + r), p * q + p * r);
      EXPECT_EQ((p + q) * r, p * r + q * r);
    }
  }
}

TEST(Companion, LastRows) {
  auto g = gf4_frobenius();
  EXPECT_EQ(companion_matrix(P(g, "X^4 + 1")).row_list().back(), (Word{1, 0, 0, 0}));
  EXPECT_EQ(companion_matrix(P(g, "X^4 + X^2 + 1")).row_list().back(), (Word{1, 0, 1, 0}));
  auto z = SkewContext::create(RingMap::identity(Ring::integers_mod(4)));
  EXPECT_EQ(companion_matrix(SkewPoly::parse(z, "X^2 - 1")).row_list().back(), (Word{1, 0}));
}

TEST(Companion, TfIsMultiplicationByX) {
  auto z = SkewContext::create(RingMap::identity(Ring::integers_mod(4)));
  auto f = SkewPoly::parse(z, "X^3 - 1");
  EXPECT_EQ(apply_tf(Word{1, 2, 3}, f), (Word{3, 1, 2}));
  EXPECT_EQ(apply_tf(Word{0, 0, 0}, f), (Word{0, 0, 0}));
  std::mt19937_64 rng(9);
  for (const auto& c : all_contexts()) {
    for (int it = 0; it < 40; ++it) {
      auto fm = random_monic(c, 1 + it % 4, rng);
      auto p = random_poly(c, 6, rng);
      Word t = phi_coordinates(p, fm);
      auto xp = p;
      for (int i = 0; i < 5; ++i) {
        xp = SkewPoly::x(c) * xp;
        t = apply_tf(t, fm);
        ASSERT_EQ(t, phi_coordinates(xp, fm)) << c->name();
      }
    }
  }
}

TEST(Companion, PhiCoordinates) {
  auto g = gf4_frobenius();
  auto f = P(g, "X^4 + X^2 + 1");
  EXPECT_EQ(phi_coordinates(P(g, "X^4"), f), (Word{1, 0, 1, 0}));
  const Ring& R = g->ring();
  EXPECT_EQ(phi_coordinates(P(g, "X^2 + alpha"), f), (Word{R.generator(), 0, 1, 0}));
  EXPECT_EQ(phi_coordinates(P(g, "X + 1"), f), (Word{1, 1, 0, 0}));
}

TEST(PrincipalCode, Gf4Step1) {
  auto c = gf4_frobenius();
  const Ring& R = c->ring();
  auto f = P(c, "X^4 + X^2 + 1"), g = P(c, "X^2 + alpha"), h = P(c, "X^2 + alpha^2");
  auto c1 = principal_code(g, f);
  EXPECT_EQ(c1.generator, mat(R, {{"alpha", "0", "1", "0"}, {"0", "alpha^2", "0", "1"}}));
  ASSERT_TRUE(c1.parity.has_value());
  EXPECT_EQ(*c1.h, h);
  EXPECT_EQ(*c1.parity, mat(R, {{"1", "0", "alpha", "0"}, {"0", "1", "0", "alpha^2"}}));
  EXPECT_TRUE((c1.generator * c1.parity->transpose()).is_zero());
  EXPECT_TRUE(code_equals(c1.realized.dual(), LinearCode(*c1.parity)));
  auto c2 = principal_code(h, f);
  EXPECT_EQ(c2.generator, mat(R, {{"alpha^2", "0", "1", "0"}, {"0", "alpha", "0", "1"}}));
  EXPECT_EQ(*c2.parity, mat(R, {{"1", "0", "alpha^2", "0"}, {"0", "1", "0", "alpha"}}));
}

TEST(PrincipalCode, Gf4Step2) {
  for (const auto& [ctx, beta] :
       std::vector<std::pair<SkewContextPtr, const char*>>{{gf4_frobenius(), "1"},
                                                            {gf4_identity(), "alpha"}}) {
    const Ring& R = ctx->ring();
    auto names = [&](std::string_view n) -> std::optional<Elem> {
      if (n == "b") return R.parse(beta);
      return std::nullopt;
    };
    auto Q = [&](const char* t) { return SkewPoly::parse(ctx, t, names); };
    auto f = Q("X^4 + b^4"), g = Q("X + b"), h = Q("X^3 + b X^2 + b^2 X + b^3");
    EXPECT_EQ(g * h, f);
    EXPECT_EQ(h * g, f);
    const Elem b = R.parse(beta), b2 = R.mul(b, b), b3 = R.mul(b2, b);
    auto c3 = principal_code(g, f);
    EXPECT_EQ(c3.generator, Matrix(R, 3, 4, {b, 1, 0, 0, 0, b, 1, 0, 0, 0, b, 1}));
    EXPECT_EQ(*c3.parity, Matrix(R, 1, 4, {1, b, b2, b3}));
    auto c4 = principal_code(h, f);
    EXPECT_EQ(c4.generator, Matrix(R, 1, 4, {b3, b2, b, 1}));
    EXPECT_EQ(*c4.parity, Matrix(R, 3, 4, {1, b, 0, 0, 0, 1, b, 0, 0, 0, 1, b}));
    for (const auto* pc : {&c3, &c4}) {
      EXPECT_TRUE((pc->generator * pc->parity->transpose()).is_zero());
      EXPECT_TRUE(code_equals(pc->realized.dual(), LinearCode(*pc->parity)));
    }
  }
}

TEST(PrincipalCode, ExGenerator) {
  auto c = ex_context();
  auto code = principal_code(P(c, "X^2 + X + a"), P(c, "X^4 + 1"));
  EXPECT_EQ(code.generator,
            mat(c->ring(), {{"(2,2)", "1", "1", "0"}, {"0", "(2,2)", "1", "1"}}));
  EXPECT_TRUE(code.realized.freeness().free);
  EXPECT_EQ(code.realized.freeness().rank, 2u);
}

TEST(PrincipalCode, RowSemantics) {
  std::vector<std::tuple<SkewContextPtr, std::string, std::string>> cases = {
      {gf4_frobenius(), "X^2 + alpha", "X^4 + X^2 + 1"},
      {gf4_frobenius(), "X^2 + alpha^2", "X^4 + X^2 + 1"},
      {gf4_frobenius(), "X + 1", "X^4 + 1"},
      {gf4_frobenius(), "X^3 + X^2 + X + 1", "X^4 + 1"},
      {gf4_identity(), "X + alpha", "X^4 + alpha"},
      {gf4_identity(), "X^3 + alpha X^2 + alpha^2 X + 1", "X^4 + alpha"},
      {ex_context(), "X^2 + X + a", "X^4 + 1"},
      {ex_context(), "X^2 + a X + a", "X^4 + 1"}};
  for (const auto& [c, gs, fs] : cases) {
    auto g = P(c, gs.c_str()), f = P(c, fs.c_str());
    auto code = principal_code(g, f);
    auto xi = g;
    for (std::size_t i = 0; i < code.k; ++i) {
      EXPECT_EQ(Word(code.generator.row(i).begin(), code.generator.row(i).end()),
                phi_coordinates(xi, f))
          << gs << " row " << i;
      xi = SkewPoly::x(c) * xi;
    }
    ASSERT_TRUE(code.h.has_value()) << gs;
    // Column c of the parity matrix is a window on phi(X^c h).
    auto xh = *code.h;
    for (std::size_t col = 0; col < code.n; ++col) {
      const Word coords = phi_coordinates(xh, f);
      for (std::size_t r = 0; r < code.n - code.k; ++r)
        EXPECT_EQ((*code.parity)(r, col), coords[code.k + r]) << gs << " col " << col;
      xh = SkewPoly::x(c) * xh;
    }
    EXPECT_TRUE((code.generator * code.parity->transpose()).is_zero()) << gs;
    EXPECT_TRUE(code_equals(code.realized.dual(), LinearCode(*code.parity))) << gs;
  }
}

TEST(PrincipalCode, WithDerivation) {
  // f = g h built from a monic g and h so that g both left- and right-divides.
  auto c = all_contexts()[3];
  auto g = SkewPoly::parse(c, "X + alpha");
  auto h = SkewPoly::parse(c, "X^2 + X + 1");
  auto f = g * h;
  if (right_divmod(f, g).remainder.is_zero()) {
    auto code = principal_code(g, f);
    ASSERT_TRUE(code.parity.has_value());
    EXPECT_TRUE((code.generator * code.parity->transpose()).is_zero());
  }
}

TEST(PrincipalCode, NotADivisor) {
  auto c = gf4_frobenius();
  EXPECT_THROW(principal_code(P(c, "X + alpha"), P(c, "X^4 + X^2 + 1")), PreconditionError);
}

TEST(SkewReciprocal, Examples) {
  auto c = ex_context();
  EXPECT_EQ(skew_reciprocal(P(c, "X^2 + a X + a")), P(c, "a X^2 + a X + 1"));
  EXPECT_EQ(skew_reciprocal(P(c, "a")), P(c, "a"));
  EXPECT_EQ(skew_reciprocal(P(c, "X^2")), P(c, "1"));
}

TEST(SelfDualCriteria, Ex) {
  auto c = ex_context();
  const Ring& R = c->ring();
  auto rep = constacyclic_selfdual_criteria(P(c, "X^2 + X + a"), P(c, "X^4 + 1"));
  EXPECT_EQ(rep.a, R.parse("(2,2)"));
  EXPECT_TRUE(rep.cond1);
  EXPECT_TRUE(rep.direct);
  ASSERT_EQ(rep.cond2_per_l.size(), 3u);
  EXPECT_EQ(rep.cond2_sums[0], R.parse("(2,2)"));
  EXPECT_FALSE(rep.cond2_per_l[0]);
  EXPECT_TRUE(rep.cond2_per_l[1]);
  EXPECT_TRUE(rep.cond2_per_l[2]);
}

TEST(SelfDualCriteria, NotSelfDual) {
  auto c = ex_context();
  auto f = P(c, "X^4 - 1"), g = P(c, "X^2 + 1");
  ASSERT_TRUE(right_divmod(f, g).remainder.is_zero());
  auto rep = constacyclic_selfdual_criteria(g, f);
  EXPECT_FALSE(rep.direct);
  EXPECT_FALSE(rep.cond1);
}

TEST(SelfDualCriteria, Preconditions) {
  auto c = ex_context();
  EXPECT_THROW(constacyclic_selfdual_criteria(P(c, "X + 1"), P(c, "X^3 + 1")), PreconditionError);
  EXPECT_THROW(constacyclic_selfdual_criteria(P(c, "X^2 + 1"), P(c, "X^4 + X + 1")),
               PreconditionError);
  auto d = all_contexts()[3];
  EXPECT_THROW(constacyclic_selfdual_criteria(SkewPoly::parse(d, "X + 1"),
                                              SkewPoly::parse(d, "X^2 + 1")),
               PreconditionError);
}
