#include <gtest/gtest.h>

#include <random>

#include "ringmpc/errors.hpp"
#include "ringmpc/linear_code.hpp"
#include "ringmpc/matrix.hpp"
#include "ringmpc/oracle.hpp"
#include "test_util.hpp"

using namespace ringmpc;
using testutil::mat;

TEST(Matrix, IdentityTimes) {
  auto r = testutil::f3xf3();
  auto a = mat(r, {{"(2,2)", "(1,1)"}, {"(1,1)", "(1,1)"}});
  EXPECT_EQ(Matrix::identity(r, 2) * a, a);
  EXPECT_THROW(a * Matrix::identity(r, 3), DimensionError);
}


TEST(Matrix, Z20Diagonal) {
  auto z = Ring::integers_mod(20);
  auto a = mat(z, {{"3", "0"}, {"0", "7"}});
  auto b = mat(z, {{"7", "0"}, {"0", "3"}});
  EXPECT_EQ(a * b, Matrix::identity(z, 2));
  EXPECT_EQ(determinant(a), 1u);
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, b);
}

TEST(Matrix, SingularZ4) {
  auto z4 = Ring::integers_mod(4);
  auto a = mat(z4, {{"1", "2"}, {"0", "2"}});
  EXPECT_EQ(determinant(a), 2u);
  EXPECT_FALSE(is_nonsingular(a));
  EXPECT_FALSE(inverse(a).has_value());
  EXPECT_EQ(*inverse(Matrix::identity(z4, 3)), Matrix::identity(z4, 3));
}

TEST(Matrix, DeterminantErrors) {
  auto z4 = Ring::integers_mod(4);
  EXPECT_THROW(determinant(Matrix(z4, 2, 3)), DimensionError);
  Limits small;
  small.max_cofactor_size = 2;
  EXPECT_THROW(determinant(Matrix::identity(z4, 3), small), BudgetExceeded);
}

TEST(Matrix, TransposeOfProduct) {
  std::mt19937_64 rng(7);
  for (auto r : {Ring::integers_mod(6), Ring::galois_field(2, 2), testutil::f3xf3()}) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int it = 0; it < 20; ++it) {
      Matrix a(r, 2, 3), b(r, 3, 4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = pick(rng);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) b(i, j) = pick(rng);
      EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    }
  }
}

TEST(Kernel, Z4FullRankExample) {
  auto z4 = Ring::integers_mod(4);
  auto a = mat(z4, {{"1", "2", "0"}, {"0", "2", "1"}});
  EXPECT_TRUE(left_kernel(a).is_zero());
  EXPECT_TRUE(is_full_rank(a));
  EXPECT_FALSE(is_full_rank(mat(z4, {{"2"}})));
  EXPECT_THROW(is_full_rank(mat(z4, {{"1"}, {"0"}})), DimensionError);
  EXPECT_TRUE(left_kernel(Matrix::identity(z4, 3)).is_zero());
}

TEST(Kernel, Z20Multiple) {
  auto z = Ring::integers_mod(20);
  auto k = left_kernel(mat(z, {{"10"}}));
  Word expect;
  for (Elem v = 0; v < 20; v += 2) expect.push_back(v);
  std::vector<Word> words;
  for (Elem v : expect) words.push_back({v});
  EXPECT_EQ(k.codewords(), words);
}

// Full rank, non-singular and invertible agree on every 2x2 matrix over Z4.
TEST(Kernel, EquivalencesExhaustiveZ4) {
  auto z4 = Ring::integers_mod(4);
  for (Elem e = 0; e < 256; ++e) {
    Matrix a(z4, 2, 2, {e & 3, (e >> 2) & 3, (e >> 4) & 3, (e >> 6) & 3});
    const bool fr = is_full_rank(a);
    EXPECT_EQ(fr, is_nonsingular(a)) << a.to_string();
    EXPECT_EQ(fr, inverse(a).has_value()) << a.to_string();
    EXPECT_EQ(fr, oracle::left_kernel_by_enumeration(a).size() == 1) << a.to_string();
  }
}

TEST(Kernel, EquivalencesSampled) {
  std::mt19937_64 rng(11);
  for (auto r : {Ring::integers_mod(6), Ring::integers_mod(20), Ring::galois_field(2, 2),
                 testutil::f3xf3(), Ring::integers_mod(8)}) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int it = 0; it < 150; ++it) {
      const std::size_t s = 1 + it % 3;
      Matrix a(r, s, s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a(i, j) = pick(rng);
      const bool fr = is_full_rank(a);
      EXPECT_EQ(fr, is_nonsingular(a)) << r.name() << a.to_string();
      auto inv = inverse(a);
      EXPECT_EQ(fr, inv.has_value());
      if (inv) {
        EXPECT_EQ(a * *inv, Matrix::identity(r, s));
        EXPECT_EQ(*inv * a, Matrix::identity(r, s));
      }
    }
  }
}

TEST(Kernel, StructuredMatchesExhaustive) {
  std::mt19937_64 rng(3);
  for (auto r : {Ring::integers_mod(4), Ring::integers_mod(6), Ring::integers_mod(8),
                 Ring::integers_mod(20), Ring::galois_field(2, 2), testutil::f3xf3(),
                 Ring::product({Ring::integers_mod(4), Ring::integers_mod(3)})}) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int it = 0; it < 60; ++it) {
      const std::size_t rows = 1 + it % 3, cols = 1 + (it / 3) % 3;
      Matrix a(r, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = pick(rng);
      auto s = left_kernel(a, KernelStrategy::Structured);
      auto e = left_kernel(a, KernelStrategy::Exhaustive);
      EXPECT_TRUE(code_equals(s, e)) << r.name() << a.to_string();
      EXPECT_EQ(s.codewords(), oracle::left_kernel_by_enumeration(a)) << r.name() << a.to_string();
    }
  }
}

TEST(Kernel, ExhaustiveBudget) {
  Limits tiny;
  tiny.kernel_ops = 10;
  auto z4 = Ring::integers_mod(4);
  EXPECT_THROW(left_kernel(Matrix::identity(z4, 3), KernelStrategy::Exhaustive, tiny),
               BudgetExceeded);
}

TEST(Matrix, ExMatrixOrthogonal) {
  auto r = testutil::f3xf3();
  auto a = mat(r, {{"(1,0)", "(0,1)"}, {"(0,2)", "(1,0)"}});
  EXPECT_EQ(a * a.transpose(), Matrix::identity(r, 2));
  EXPECT_EQ(determinant(a), r.parse("(1,1)"));
}
