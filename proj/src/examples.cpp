#include "ringmpc/examples.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ringmpc/errors.hpp"
#include "ringmpc/oracle.hpp"

namespace ringmpc::examples {

namespace {

Matrix rows(const Ring& r, std::initializer_list<std::initializer_list<const char*>> rs) {
  std::vector<Word> out;
  for (auto row : rs) {
    Word w;
    for (const char* x : row) w.push_back(r.parse(x));
    out.push_back(std::move(w));
  }
  return Matrix::from_rows(r, out.empty() ? 0 : out[0].size(), out);
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

std::string words_to_string(const Ring& r, const std::vector<Word>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + format_word(r, ws[i]);
  return s + "}";
}

class Ledger {
 public:
  void check(std::string id, std::string desc, bool ok, std::string detail = {}) {
    out_.push_back({std::move(id), std::move(desc), true, ok, ok ? "" : std::move(detail)});
  }
  void matrix(std::string id, std::string desc, const Matrix& got, const Matrix& want) {
    const bool ok = got == want;
    check(std::move(id), std::move(desc), ok,
          "expected\n" + want.to_string() + "\ngot\n" + got.to_string());
  }
  void poly(std::string id, std::string desc, const SkewPoly& got, const SkewPoly& want) {
    check(std::move(id), std::move(desc), got == want,
          "expected " + want.to_string() + ", got " + got.to_string());
  }
  void report(std::string id, std::string desc, std::string detail) {
    out_.push_back({std::move(id), std::move(desc), false, true, std::move(detail)});
  }
  // Runs a group; an exception marks the group failed instead of aborting.
  void guarded(const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(id, "evaluation", false, std::string("exception: ") + e.what());
    }
  }
  std::vector<ExampleCheck> take() { return std::move(out_); }

 private:
  std::vector<ExampleCheck> out_;
};

}  // namespace

SwapInstance swap_instance() {
  auto f3 = Ring::integers_mod(3);
  auto r = Ring::product({f3, f3});
  auto ctx = SkewContext::create(RingMap::permute_components(r, {1, 0}), std::nullopt, "swap");
  const Elem alpha = r.parse("(2,2)");
  auto names = [alpha](std::string_view n) -> std::optional<Elem> {
    if (n == "alpha") return alpha;
    return std::nullopt;
  };
  return {ctx,
          alpha,
          SkewPoly::parse(ctx, "X^2 + X + alpha", names),
          SkewPoly::parse(ctx, "X^2 + alpha X + alpha", names),
          SkewPoly::parse(ctx, "X^4 + 1", names),
          rows(r, {{"(1,0)", "(0,1)"}, {"(0,2)", "(1,0)"}})};
}

Gf4Step1 gf4_step1() {
  auto ctx = SkewContext::create(RingMap::frobenius(Ring::galois_field(2, 2)), std::nullopt,
                                 "frobenius");
  return {ctx, SkewPoly::parse(ctx, "X^4 + X^2 + 1"), SkewPoly::parse(ctx, "X^2 + alpha"),
          SkewPoly::parse(ctx, "X^2 + alpha^2")};
}

Gf4Step2 gf4_step2(const std::string& beta, bool frobenius) {
  auto gf = Ring::galois_field(2, 2);
  auto sigma = frobenius ? RingMap::frobenius(gf) : RingMap::identity(gf);
  const Elem b = gf.parse(beta);
  if (sigma(b) != b) throw PreconditionError("beta must be fixed by sigma");
  auto ctx = SkewContext::create(sigma, std::nullopt, frobenius ? "frobenius" : "identity");
  auto names = [b](std::string_view n) -> std::optional<Elem> {
    if (n == "beta") return b;
    return std::nullopt;
  };
  return {ctx, b, SkewPoly::parse(ctx, "X^4 + beta^4", names),
          SkewPoly::parse(ctx, "X + beta", names),
          SkewPoly::parse(ctx, "X^3 + beta X^2 + beta^2 X + beta^3", names)};
}

Z4Instance z4_instance() {
  auto r = Ring::integers_mod(4);
  return {r, rows(r, {{"1", "2", "0"}, {"0", "2", "1"}}), LinearCode(rows(r, {{"1", "2", "0"}})),
          LinearCode(rows(r, {{"1", "2", "0"}, {"0", "2", "1"}}))};
}

Z20Instance z20_instance() {
  auto r = Ring::integers_mod(20);
  return {r, LinearCode(rows(r, {{"10"}})), LinearCode(rows(r, {{"2"}})),
          rows(r, {{"3", "0"}, {"0", "7"}})};
}

Z20Verdict z20_investigation(const Limits& limits) {
  auto z = z20_instance();
  Z20Verdict v;
  const auto primal = build_mpc({z.c1, z.c2}, z.a);
  const auto formula = dual_formula_unchecked({z.c1, z.c2}, z.a, limits);
  v.primal_words = oracle::span_by_coefficients(primal.realized().generators(), limits);
  v.dual_words = oracle::dual_by_enumeration(primal.realized().generators(), limits);
  v.formula_words = oracle::span_by_coefficients(formula.realized().generators(), limits);
  v.primal_size = v.primal_words.size();
  v.dual_size = v.dual_words.size();
  v.formula_size = v.formula_words.size();
  v.coincide = v.dual_words == v.formula_words;
  v.contains_8_2 = std::binary_search(v.primal_words.begin(), v.primal_words.end(), Word{8, 2});
  // Each side against its own primal: the enumerated dual against [C1 C2] A,
  // and the formula side against its own enumerated dual.
  const auto formula_dual = oracle::dual_by_enumeration(formula.realized().generators(), limits);
  const std::size_t ambient = 20 * 20;
  v.consistent = v.primal_size * v.dual_size == ambient &&
                 v.formula_size * formula_dual.size() == ambient;
  return v;
}

std::vector<ExampleCheck> verify_examples(const Limits& limits) {
  Ledger L;

  L.guarded("swap", [&] {
    const auto ex = swap_instance();
    const Ring& R = ex.ctx->ring();
    L.poly("swap.product", "(X^2+X+alpha)(X^2+alpha X+alpha) = X^4+1 over F3xF3", ex.g * ex.h,
           ex.f);
    const SkewPoly hs = skew_reciprocal(ex.h);
    L.poly("swap.reciprocal", "h* = alpha X^2 + alpha X + 1", hs,
           SkewPoly(ex.ctx, Word{R.one(), ex.alpha, ex.alpha}));
    const Elem h0inv = *R.inverse(ex.h.coeff(0));
    L.poly("swap.g-from-h", "g = sigma^2(h0^-1) h*",
           SkewPoly::constant(ex.ctx, ex.ctx->sigma_power(h0inv, 2)) * hs, ex.g);
    const auto code = principal_code(ex.g, ex.f);
    L.matrix("swap.generator", "generator M of the code of g",
             code.generator, rows(R, {{"(2,2)", "1", "1", "0"}, {"0", "(2,2)", "1", "1"}}));
    L.check("swap.orthogonal", "A A^T = I", ex.a * ex.a.transpose() == Matrix::identity(R, 2));
    const auto mpc = build_skew_mpc({code, code}, ex.a);
    const Matrix& G = mpc.realized().generators();
    L.matrix("swap.block", "4x8 generator of [g g]A", G,
             rows(R, {{"(2,0)", "(1,0)", "(1,0)", "(0,0)", "(0,2)", "(0,1)", "(0,1)", "(0,0)"},
                      {"(0,0)", "(2,0)", "(1,0)", "(1,0)", "(0,0)", "(0,2)", "(0,1)", "(0,1)"},
                      {"(0,1)", "(0,2)", "(0,2)", "(0,0)", "(2,0)", "(1,0)", "(1,0)", "(0,0)"},
                      {"(0,0)", "(0,1)", "(0,2)", "(0,2)", "(0,0)", "(2,0)", "(1,0)", "(1,0)"}}));
    L.check("swap.gram", "G G^T = 0", (G * G.transpose()).is_zero());
    const auto fr = mpc.realized().freeness();
    L.check("swap.free", "[g g]A is free of rank 4", fr.free && fr.rank == 4,
            "free=" + std::to_string(fr.free) + " rank=" + std::to_string(fr.rank));
    L.check("swap.self-dual", "[g g]A equals its dual",
            code_equals(mpc.realized(), mpc.realized().dual()));
    L.check("swap.mpc-dual", "dual formula reproduces [g g]A",
            code_equals(mpc_dual({code.realized, code.realized}, ex.a, limits).realized(),
                        mpc.realized()));
    const auto crit = constacyclic_selfdual_criteria(ex.g, ex.f, limits);
    L.check("swap.cond1", "sigma^k(h0^-1) h* = g for g h = X^4 - sigma^-2(a)", crit.cond1);
    L.check("swap.direct", "code of g is self-dual by direct computation", crit.direct);
    std::string sums;
    for (std::size_t l = 0; l < crit.cond2_sums.size(); ++l)
      sums += (l ? ", " : "") + std::string("l=") + std::to_string(l) + ": " +
              R.format(crit.cond2_sums[l]);
    L.check("swap.cond2", "literal sums vanish for l = 1, 2",
            crit.cond2_per_l.size() == 3 && crit.cond2_per_l[1] && crit.cond2_per_l[2], sums);
    L.report("swap.cond2-l0", "literal sum at l = 0", sums);
    const auto rep = characterization_check({code.realized, code.realized}, ex.a, limits);
    L.check("swap.characterization", "duality classes of [g g]A match the inputs",
            rep.all_hold() && rep.mpc.self_dual);
  });

  L.guarded("gf4.step1", [&] {
    const auto s = gf4_step1();
    const Ring& R = s.ctx->ring();
    L.check("gf4.step1.products", "f1 = g1 h1 = h1 g1", s.g1 * s.h1 == s.f1 && s.h1 * s.g1 == s.f1);
    const auto c1 = principal_code(s.g1, s.f1);
    const auto c2 = principal_code(s.h1, s.f1);
    L.matrix("gf4.G1", "G1", c1.generator, rows(R, {{"alpha", "0", "1", "0"}, {"0", "alpha^2", "0", "1"}}));
    L.matrix("gf4.G2", "G2", c2.generator, rows(R, {{"alpha^2", "0", "1", "0"}, {"0", "alpha", "0", "1"}}));
    L.check("gf4.H1.exists", "h1 recovered by left division", c1.parity.has_value());
    L.check("gf4.H2.exists", "g1 recovered by left division", c2.parity.has_value());
    if (c1.parity)
      L.matrix("gf4.H1", "H1", *c1.parity, rows(R, {{"1", "0", "alpha", "0"}, {"0", "1", "0", "alpha^2"}}));
    if (c2.parity)
      L.matrix("gf4.H2", "H2", *c2.parity, rows(R, {{"1", "0", "alpha^2", "0"}, {"0", "1", "0", "alpha"}}));
    for (const auto* c : {&c1, &c2}) {
      const std::string j = c == &c1 ? "1" : "2";
      if (!c->parity) continue;
      L.check("gf4.G" + j + "H" + j, "G" + j + " H" + j + "^T = 0",
              (c->generator * c->parity->transpose()).is_zero());
      L.check("gf4.H" + j + ".dual", "rows of H" + j + " span the dual",
              code_equals(c->realized.dual(), LinearCode(*c->parity)));
    }
  });

  for (const auto& [beta, frob] : std::vector<std::pair<std::string, bool>>{{"1", true}, {"alpha", false}}) {
    const std::string tag = "gf4.step2[beta=" + beta + "]";
    L.guarded(tag, [&] {
      const auto s = gf4_step2(beta, frob);
      const Ring& R = s.ctx->ring();
      const Elem b = s.beta, b2 = R.mul(b, b), b3 = R.mul(b2, b);
      L.check(tag + ".products", "f2 = g2 h2 = h2 g2", s.g2 * s.h2 == s.f2 && s.h2 * s.g2 == s.f2);
      const auto c3 = principal_code(s.g2, s.f2);
      const auto c4 = principal_code(s.h2, s.f2);
      L.matrix(tag + ".G3", "G3", c3.generator, Matrix(R, 3, 4, {b, 1, 0, 0, 0, b, 1, 0, 0, 0, b, 1}));
      L.matrix(tag + ".G4", "G4", c4.generator, Matrix(R, 1, 4, {b3, b2, b, 1}));
      L.check(tag + ".parity", "h2 and g2 recovered by left division",
              c3.parity.has_value() && c4.parity.has_value());
      if (!c3.parity || !c4.parity) return;
      L.matrix(tag + ".H3", "H3", *c3.parity, Matrix(R, 1, 4, {1, b, b2, b3}));
      L.matrix(tag + ".H4", "H4", *c4.parity, Matrix(R, 3, 4, {1, b, 0, 0, 0, 1, b, 0, 0, 0, 1, b}));
      L.check(tag + ".G3H3", "G3 H3^T = 0", (c3.generator * c3.parity->transpose()).is_zero());
      L.check(tag + ".G4H4", "G4 H4^T = 0", (c4.generator * c4.parity->transpose()).is_zero());
    });
  }

  L.guarded("gf4.step3", [&] {
    const auto s1 = gf4_step1();
    const auto s2 = gf4_step2();
    const Ring& R = s1.ctx->ring();
    const auto c1 = principal_code(s1.g1, s1.f1);
    const auto c2 = principal_code(s1.h1, s1.f1);
    const auto c3 = principal_code(s2.g2, s2.f2);
    const auto c4 = principal_code(s2.h2, s2.f2);
    // [g1 h2] A with a 2 x 3 full-rank A.
    const Matrix a = rows(R, {{"1", "0", "1"}, {"0", "1", "alpha"}});
    const auto m = build_skew_mpc({c1, c4}, a);
    L.matrix("gf4.step3.g1h2", "[g1 h2]A has blocks (a_1t G1 | a_2t G4)",
             m.realized().generators(), block_generator({c1.generator, c4.generator}, a));
    const auto fm = m.realized().freeness();
    L.check("gf4.step3.g1h2.rank", "[g1 h2]A is free of rank 3", fm.free && fm.rank == 3);
    // [h2 g2 h1] B with a 3 x 3 non-singular B, and its dual from parity blocks.
    const Matrix b = rows(R, {{"1", "1", "0"}, {"0", "1", "1"}, {"1", "0", "alpha"}});
    const auto mb = build_skew_mpc({c4, c3, c2}, b);
    const auto fb = mb.realized().freeness();
    L.check("gf4.step3.h2g2h1.rank", "[h2 g2 h1]B is free of rank 6", fb.free && fb.rank == 6);
    const auto hb = skew_mpc_dual({c4, c3, c2}, b, limits);
    L.check("gf4.step3.h2g2h1.dual", "parity blocks b_ij H_j generate the dual",
            code_equals(hb.realized(), mb.realized().dual()));
    L.check("gf4.step3.h2g2h1.GHt", "G H^T = 0",
            (mb.realized().generators() * hb.realized().generators().transpose()).is_zero());
  });

  L.guarded("z20.step4", [&] {
    auto z = Ring::integers_mod(20);
    auto ctx = SkewContext::create(RingMap::identity(z), std::nullopt, "identity");
    const auto f = SkewPoly::parse(ctx, "X^4 - 1");
    const auto c1 = principal_code(SkewPoly::parse(ctx, "X^2 + 1"), f);
    const auto c2 = principal_code(SkewPoly::parse(ctx, "X^2 - 1"), f);
    const Matrix a = rows(z, {{"3", "0"}, {"0", "7"}});
    const auto inv = inverse(a);
    L.check("z20.step4.inverse", "(A^-1)^T = diag(7,3)",
            inv && inv->transpose() == rows(z, {{"7", "0"}, {"0", "3"}}));
    if (!c1.parity || !c2.parity) {
      L.check("z20.step4.parity", "parity matrices exist", false);
      return;
    }
    const auto g = build_skew_mpc({c1, c2}, a);
    const auto h = skew_mpc_dual({c1, c2}, a, limits);
    L.matrix("z20.step4.G", "G = diag(3 G1, 7 G2)", g.realized().generators(),
             block_diag(c1.generator.scaled(3), c2.generator.scaled(7)));
    L.matrix("z20.step4.H", "H = diag(7 H1, 3 H2)", h.realized().generators(),
             block_diag(c1.parity->scaled(7), c2.parity->scaled(3)));
    L.check("z20.step4.GHt", "G H^T = 0",
            (g.realized().generators() * h.realized().generators().transpose()).is_zero());
    L.check("z20.step4.dual", "H generates the dual of [g1 g2]A",
            code_equals(h.realized(), g.realized().dual()));
  });

  L.guarded("z4", [&] {
    const auto z = z4_instance();
    const std::vector<LinearCode> in{z.cl2, z.cl1};
    const auto fam = row_codes(z.a, limits);
    L.check("z4.full-rank", "A is of full rank", is_full_rank(z.a));
    L.check("z4.D", "D1 = D2 = 1", fam.distances == std::vector<std::size_t>{1, 1});
    const auto w1 = z.cl1.minimum_weight_words(limits);
    const auto w2 = z.cl2.minimum_weight_words(limits);
    L.check("z4.CL1.min-words", "weight-1 words of C_L1 are {(2,0,0)}",
            w1 == std::vector<Word>{{2, 0, 0}}, words_to_string(z.ring, w1));
    L.check("z4.CL2.min-words", "weight-1 words of C_L2 are {(2,0,0),(0,0,2)}",
            w2 == std::vector<Word>{{0, 0, 2}, {2, 0, 0}}, words_to_string(z.ring, w2));
    const std::size_t bound = distance_lower_bound(in, z.a, limits);
    const auto mpc = build_mpc(in, z.a);
    const auto exact = oracle::min_distance_by_coefficients(mpc.realized().generators(), limits);
    L.check("z4.bound", "bound = 1", bound == 1, "bound=" + std::to_string(bound));
    L.check("z4.distance", "d([C1 C2]A) = 1 by brute force", exact && *exact == 1);
    const Word c = mpc_word({{0, 0, 0}, {2, 0, 0}}, z.a);
    L.check("z4.word", "(c1 c2) = [[0,2],[0,0],[0,0]] gives a weight-1 codeword",
            hamming_weight(c) == 1 && mpc.realized().contains(c), format_word(z.ring, c));
    const auto sw = sharpness_witness(in, z.a, limits);
    L.check("z4.sharpness", "no sharpness witness (all products vanish)",
            sw.status == SharpnessStatus::NoWitness, to_string(sw.status) + ": " + sw.detail);
    L.check("z4.kron", "X1 x1 = 0 for the weight-1 words",
            hamming_weight(kron_mult(z.ring, Word{2, 0, 0}, Word{2, 0, 0})) == 0 &&
                hamming_weight(kron_mult(z.ring, Word{2, 0, 0}, Word{0, 0, 2})) == 0);
  });

  L.guarded("z20", [&] {
    const auto z = z20_instance();
    L.check("z20.duals", "C1^perp = C2 and C2^perp = C1",
            code_equals(z.c1.dual(), z.c2) && code_equals(z.c2.dual(), z.c1));
    L.check("z20.not-free", "C1 and C2 are not free",
            !z.c1.freeness().free && !z.c2.freeness().free);
    bool refused = false;
    try {
      mpc_dual({z.c1, z.c2}, z.a, limits);
    } catch (const PreconditionError&) {
      refused = true;
    }
    L.check("z20.refuse", "dual formula refuses non-free inputs", refused);
    const auto v = z20_investigation(limits);
    L.check("z20.consistent", "enumeration sizes multiply to |R|^n = 400", v.consistent,
            std::to_string(v.primal_size) + " * " + std::to_string(v.dual_size));
    std::ostringstream os;
    os << "|[C1 C2]A| = " << v.primal_size << ", |([C1 C2]A)^perp| = " << v.dual_size
       << ", |[C1^perp C2^perp](A^-1)^T| = " << v.formula_size
       << "; sides coincide: " << (v.coincide ? "yes" : "no")
       << "; (8,2) in [C1 C2]A: " << (v.contains_8_2 ? "yes" : "no")
       << "; [C1 C2]A = " << words_to_string(Ring::integers_mod(20), v.primal_words);
    L.report("z20.verdict", "dual of [C1 C2]A versus the formula side", os.str());
  });

  return L.take();
}

}  // namespace ringmpc::examples
