#include <gtest/gtest.h>

#include <random>

#include "ringmpc/errors.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/oracle.hpp"
#include "test_util.hpp"

using namespace ringmpc;
using testutil::mat;

namespace {

struct Z4Fixture {
  Ring r = Ring::integers_mod(4);
  Matrix a = mat(r, {{"1", "2", "0"}, {"0", "2", "1"}});
  LinearCode cl1{mat(r, {{"1", "2", "0"}})};
  LinearCode cl2{mat(r, {{"1", "2", "0"}, {"0", "2", "1"}})};
  std::vector<LinearCode> inputs() const { return {cl2, cl1}; }
};

}  // namespace

TEST(MatrixProduct, Z4InstanceBound) {
  Z4Fixture z;
  auto fam = row_codes(z.a);
  EXPECT_EQ(fam.distances, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(distance_lower_bound(z.inputs(), z.a), 1u);
  auto mpc = build_mpc(z.inputs(), z.a);
  EXPECT_EQ(mpc.realized().length(), 9u);
  EXPECT_EQ(mpc.realized().min_distance(), 1u);
  // (c1 c2) = [[0,2],[0,0],[0,0]] gives the matrix with a single 2 in the corner.
  const Word c = mpc_word({{0, 0, 0}, {2, 0, 0}}, z.a);
  EXPECT_EQ(hamming_weight(c), 1u);
  EXPECT_TRUE(mpc.realized().contains(c));
  EXPECT_EQ(codeword_matrix(z.r, c, 3, 3), mat(z.r, {{"0", "0", "2"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  auto sw = sharpness_witness(z.inputs(), z.a);
  EXPECT_EQ(sw.status, SharpnessStatus::NoWitness);
}

TEST(MatrixProduct, KronMult) {
  auto z4 = Ring::integers_mod(4);
  EXPECT_EQ(kron_mult(z4, Word{2, 0, 0}, Word{2, 2, 0}), Word(9, 0));
  EXPECT_EQ(kron_mult(z4, Word{1, 0}, Word{3, 1}), (Word{3, 1, 0, 0}));
  auto gf = Ring::galois_field(2, 2);
  const Word u{1, 0, 2}, v{3, 3, 0, 1};
  EXPECT_EQ(hamming_weight(kron_mult(gf, u, v)), hamming_weight(u) * hamming_weight(v));
}

TEST(MatrixProduct, IdentityLayout) {
  auto z4 = Ring::integers_mod(4);
  const Word c1{1, 2}, c2{3, 0};
  EXPECT_EQ(mpc_word({c1, c2}, Matrix::identity(z4, 2)), (Word{1, 2, 3, 0}));
  EXPECT_EQ(mpc_word({c1, c2}, Matrix::identity(z4, 2)),
            oracle::mpc_codeword({c1, c2}, Matrix::identity(z4, 2)));
}

TEST(MatrixProduct, ExBlockMatrix) {
  auto r = testutil::f3xf3();
  auto m = mat(r, {{"(2,2)", "1", "1", "0"}, {"0", "(2,2)", "1", "1"}});
  auto a = mat(r, {{"(1,0)", "(0,1)"}, {"(0,2)", "(1,0)"}});
  LinearCode c(m);
  auto mpc = build_mpc({c, c}, a);
  auto expect = mat(r, {{"(2,0)", "(1,0)", "(1,0)", "(0,0)", "(0,2)", "(0,1)", "(0,1)", "(0,0)"},
                        {"(0,0)", "(2,0)", "(1,0)", "(1,0)", "(0,0)", "(0,2)", "(0,1)", "(0,1)"},
                        {"(0,1)", "(0,2)", "(0,2)", "(0,0)", "(2,0)", "(1,0)", "(1,0)", "(0,0)"},
                        {"(0,0)", "(0,1)", "(0,2)", "(0,2)", "(0,0)", "(2,0)", "(1,0)", "(1,0)"}});
  EXPECT_EQ(mpc.realized().generators(), expect);
  EXPECT_TRUE((expect * expect.transpose()).is_zero());
  auto fr = mpc.realized().freeness();
  EXPECT_TRUE(fr.free);
  EXPECT_EQ(fr.rank, 4u);
  EXPECT_TRUE(code_equals(mpc.realized(), mpc.realized().dual()));
  auto d = mpc_dual({c, c}, a);
  EXPECT_TRUE(code_equals(d.realized(), mpc.realized()));
  EXPECT_EQ(is_quasi_orthogonal(a), std::optional<Word>(Word{r.one(), r.one()}));
  auto rep = characterization_check({c, c}, a);
  EXPECT_TRUE(rep.mpc.self_dual);
  EXPECT_TRUE(rep.all_hold());
}

TEST(MatrixProduct, Z20Investigation) {
  auto z = Ring::integers_mod(20);
  LinearCode c1(mat(z, {{"10"}})), c2(mat(z, {{"2"}}));
  auto a = mat(z, {{"3", "0"}, {"0", "7"}});
  EXPECT_THROW(mpc_dual({c1, c2}, a), PreconditionError);
  auto primal = build_mpc({c1, c2}, a);
  auto formula = dual_formula_unchecked({c1, c2}, a);
  const auto dual_words = oracle::dual_by_enumeration(primal.realized().generators());
  const auto formula_words = oracle::span_by_coefficients(formula.realized().generators());
  const auto primal_words = oracle::span_by_coefficients(primal.realized().generators());
  EXPECT_EQ(primal_words.size() * dual_words.size(), 400u);
  EXPECT_EQ(primal_words.size() * formula_words.size(), 400u);
  EXPECT_EQ(dual_words, formula_words);
  EXPECT_FALSE(primal.realized().contains(Word{8, 2}));
}

TEST(MatrixProduct, QuasiOrthogonal) {
  auto z = Ring::integers_mod(20);
  EXPECT_EQ(is_quasi_orthogonal(mat(z, {{"3", "0"}, {"0", "7"}})), std::optional<Word>(Word{9, 9}));
  auto z4 = Ring::integers_mod(4);
  EXPECT_FALSE(is_quasi_orthogonal(mat(z4, {{"1", "1"}, {"0", "1"}})).has_value());
  EXPECT_THROW(is_quasi_orthogonal(mat(z4, {{"1", "1"}})), DimensionError);
}

TEST(MatrixProduct, DiagScale) {
  auto z = Ring::integers_mod(20);
  std::vector<LinearCode> in{LinearCode(mat(z, {{"10", "5"}})), LinearCode(mat(z, {{"2", "1"}}))};
  EXPECT_TRUE(diag_scale_equal(in, Matrix::identity(z, 2), Word{3, 7}));
  EXPECT_TRUE(diag_scale_equal(in, Matrix::identity(z, 2), Word{1, 1}));
  EXPECT_THROW(diag_scale_equal(in, Matrix::identity(z, 2), Word{2, 1}), PreconditionError);
  auto r = testutil::f3xf3();
  auto a = mat(r, {{"(1,0)", "(0,1)"}, {"(0,2)", "(1,0)"}});
  LinearCode c(mat(r, {{"(2,2)", "1", "1", "0"}, {"0", "(2,2)", "1", "1"}}));
  const Elem u = r.parse("(2,2)");
  EXPECT_TRUE(diag_scale_equal({c, c}, a, Word{u, u}));
}

TEST(MatrixProduct, Preconditions) {
  auto z4 = Ring::integers_mod(4);
  LinearCode c(mat(z4, {{"1", "0"}}));
  EXPECT_THROW(build_mpc({c}, mat(z4, {{"1"}, {"1"}})), DimensionError);
  EXPECT_THROW(distance_lower_bound({c, c}, mat(z4, {{"2", "0"}, {"0", "1"}})), PreconditionError);
  EXPECT_EQ(distance_lower_bound({c}, mat(z4, {{"1"}})), 1u);
  EXPECT_THROW(mpc_dual({c, c}, mat(z4, {{"2", "0"}, {"0", "1"}})), PreconditionError);
}

TEST(MatrixProduct, SharpnessOverField) {
  auto f3 = Ring::integers_mod(3);
  LinearCode c1(mat(f3, {{"1", "1", "0"}, {"0", "1", "1"}})), c2(mat(f3, {{"1", "2", "1"}}));
  auto a = mat(f3, {{"1", "1"}, {"0", "1"}});
  auto sw = sharpness_witness({c1, c2}, a);
  ASSERT_EQ(sw.status, SharpnessStatus::Witness);
  EXPECT_EQ(build_mpc({c1, c2}, a).realized().min_distance(), distance_lower_bound({c1, c2}, a));
  // Not nested: inapplicable.
  auto sw2 = sharpness_witness({c2, c1}, a);
  EXPECT_EQ(sw2.status, SharpnessStatus::Inapplicable);
  auto single = sharpness_witness({c1}, mat(f3, {{"1"}}));
  ASSERT_EQ(single.status, SharpnessStatus::Witness);
  EXPECT_EQ(single.big_x[0], (Word{1}));
}

TEST(MatrixProduct, RealizedMatchesOracle) {
  std::mt19937_64 rng(17);
  for (auto r : {Ring::integers_mod(4), Ring::galois_field(2, 2), testutil::f3xf3(),
                 Ring::integers_mod(6)}) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int it = 0; it < 15; ++it) {
      const std::size_t n = 1 + it % 3, s = 1 + it % 2, l = s + (it / 2) % 2;
      std::vector<LinearCode> in;
      std::vector<std::vector<Word>> words;
      for (std::size_t i = 0; i < s; ++i) {
        Matrix g(r, 1, n);
        for (std::size_t j = 0; j < n; ++j) g(0, j) = pick(rng);
        in.emplace_back(g);
        words.push_back(in.back().codewords());
      }
      Matrix a(r, s, l);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < l; ++j) a(i, j) = pick(rng);
      EXPECT_EQ(build_mpc(in, a).realized().codewords(), oracle::mpc_by_enumeration(words, a));
    }
  }
}
