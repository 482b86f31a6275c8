#pragma once

// Worked instances with known answers, shared by the CLI, the acceptance
// runner and the tests.

#include <string>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/skew_poly.hpp"

namespace ringmpc::examples {

/// F3 x F3 with the swap automorphism; alpha = (2,2), g = X^2+X+alpha,
/// h = X^2+alpha X+alpha, f = X^4+1 and the orthogonal 2x2 matrix A.
struct SwapInstance {
  SkewContextPtr ctx;
  Elem alpha;
  SkewPoly g, h, f;
  Matrix a;
};
SwapInstance swap_instance();

/// GF(4) with Frobenius: f1 = X^4+X^2+1 = g1 h1, g1 = X^2+alpha, h1 = X^2+alpha^2.
struct Gf4Step1 {
  SkewContextPtr ctx;
  SkewPoly f1, g1, h1;
};
Gf4Step1 gf4_step1();

/// GF(4): f2 = X^4+beta^4 = g2 h2, g2 = X+beta, h2 = X^3+beta X^2+beta^2 X+beta^3.
/// beta must be fixed by sigma; beta = 1 pairs with Frobenius, any beta with
/// the identity.
struct Gf4Step2 {
  SkewContextPtr ctx;
  Elem beta;
  SkewPoly f2, g2, h2;
};
Gf4Step2 gf4_step2(const std::string& beta = "1", bool frobenius = true);

/// Z4, A = [[1,2,0],[0,2,1]], C_{L1} = Z4 (1,2,0), C_{L2} = C_{L1} + Z4 (0,2,1).
struct Z4Instance {
  Ring ring;
  Matrix a;
  LinearCode cl1, cl2;
};
Z4Instance z4_instance();

/// Z20, C1 = 10 Z20, C2 = 2 Z20, A = diag(3,7).
struct Z20Instance {
  Ring ring;
  LinearCode c1, c2;
  Matrix a;
};
Z20Instance z20_instance();

struct Z20Verdict {
  std::size_t primal_size = 0;
  std::size_t dual_size = 0;     // enumerated ([C1 C2] A)^perp
  std::size_t formula_size = 0;  // [C1^perp C2^perp] (A^{-1})^T
  bool coincide = false;
  bool contains_8_2 = false;
  bool consistent = false;  // |primal| |dual| = |R|^n on both sides
  std::vector<Word> primal_words, dual_words, formula_words;
};
Z20Verdict z20_investigation(const Limits& limits = {});

struct ExampleCheck {
  std::string id;
  std::string description;
  /// Golden checks have a fixed expected answer; investigations only report.
  bool golden = true;
  bool passed = false;
  std::string detail;
};

std::vector<ExampleCheck> verify_examples(const Limits& limits = {});

}  // namespace ringmpc::examples
