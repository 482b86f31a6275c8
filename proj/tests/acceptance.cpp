// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "ringmpc/errors.hpp"
#include "ringmpc/examples.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/oracle.hpp"
#include "ringmpc/properties.hpp"
#include "ringmpc/skew_poly.hpp"
#include "test_util.hpp"

using namespace ringmpc;
using testutil::mat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t tally(const properties::SuiteResult& r, const std::string& key) {
  for (const auto& [k, v] : r.tallies)
    if (k == key) return v;
  return 0;
}

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(t0);
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << s << " s)";
  if (!o.note.empty()) std::cout << ": " << o.note;
  std::cout << std::endl;
}

// Generator rows are phi(X^i g); parity column c is the window k..n-1 of phi(X^c h).
bool row_semantics(const PrincipalSkewCode& code) {
  const auto& ctx = code.g.context();
  SkewPoly xi = code.g;
  for (std::size_t i = 0; i < code.k; ++i) {
    if (Word(code.generator.row(i).begin(), code.generator.row(i).end()) != phi_coordinates(xi, code.f))
      return false;
    xi = SkewPoly::x(ctx) * xi;
  }
  if (!code.h || !code.parity) return false;
  SkewPoly xh = *code.h;
  for (std::size_t c = 0; c < code.n; ++c) {
    const Word coords = phi_coordinates(xh, code.f);
    for (std::size_t r = 0; r < code.n - code.k; ++r)
      if ((*code.parity)(r, c) != coords[code.k + r]) return false;
    xh = SkewPoly::x(ctx) * xh;
  }
  return true;
}

}  // namespace

int main() {
  const Limits limits;

  criterion("AC1", "skew product over F3xF3 with swap", [](Outcome& o) {
    const auto t0 = Clock::now();
    const auto ex = examples::swap_instance();
    auto names = [&](std::string_view n) -> std::optional<Elem> {
      if (n == "alpha") return ex.alpha;
      return std::nullopt;
    };
    const auto g = SkewPoly::parse(ex.ctx, "X^2 + X + alpha", names);
    const auto h = SkewPoly::parse(ex.ctx, "X^2 + alpha*X + alpha", names);
    const auto prod = g * h;
    const double s = seconds_since(t0);
    o.require(prod == SkewPoly::parse(ex.ctx, "X^4 + 1"), "product is " + prod.to_string());
    o.require(s < 1.0, "took " + std::to_string(s) + " s");
  });

  criterion("AC2", "generator M and the 4x8 block generator", [](Outcome& o) {
    const auto ex = examples::swap_instance();
    const Ring& R = ex.ctx->ring();
    const auto code = principal_code(ex.g, ex.f);
    o.require(code.generator == mat(R, {{"(2,2)", "1", "1", "0"}, {"0", "(2,2)", "1", "1"}}),
              "M = " + code.generator.to_string());
    const auto mpc = build_skew_mpc({code, code}, ex.a);
    const Matrix& G = mpc.realized().generators();
    o.require(G == mat(R, {{"(2,0)", "(1,0)", "(1,0)", "(0,0)", "(0,2)", "(0,1)", "(0,1)", "(0,0)"},
                           {"(0,0)", "(2,0)", "(1,0)", "(1,0)", "(0,0)", "(0,2)", "(0,1)", "(0,1)"},
                           {"(0,1)", "(0,2)", "(0,2)", "(0,0)", "(2,0)", "(1,0)", "(1,0)", "(0,0)"},
                           {"(0,0)", "(0,1)", "(0,2)", "(0,2)", "(0,0)", "(2,0)", "(1,0)", "(1,0)"}}),
              "G = " + G.to_string());
    o.require(G(0, 0) == R.parse("(2,0)"), "first entry");
  });

  criterion("AC3", "self-dual matrix-product code via the kernel path", [&](Outcome& o) {
    const auto t0 = Clock::now();
    const auto ex = examples::swap_instance();
    const auto code = principal_code(ex.g, ex.f);
    const auto mpc = build_skew_mpc({code, code}, ex.a);
    const Matrix& G = mpc.realized().generators();
    o.require((G * G.transpose()).is_zero(), "G G^T != 0");
    const auto fr = mpc.realized().freeness();
    o.require(fr.free && fr.rank == 4, "not free of rank 4");
    const LinearCode dual = left_kernel(G.transpose(), KernelStrategy::Structured, limits);
    o.require(code_equals(mpc.realized(), dual), "code differs from its dual");
    o.require(mpc.realized().cardinality() == dual.cardinality(), "cardinalities differ");
    const double s = seconds_since(t0);
    o.require(s < 30.0, "took " + std::to_string(s) + " s");
  });

  criterion("AC4", "GF(4) G1..G4, H1..H4 and Gj Hj^T = 0 (beta = 1)", [](Outcome& o) {
    const auto s1 = examples::gf4_step1();
    const auto s2 = examples::gf4_step2("1", true);
    const Ring& R = s1.ctx->ring();
    const auto c1 = principal_code(s1.g1, s1.f1);
    const auto c2 = principal_code(s1.h1, s1.f1);
    const auto c3 = principal_code(s2.g2, s2.f2);
    const auto c4 = principal_code(s2.h2, s2.f2);
    o.require(c1.generator == mat(R, {{"alpha", "0", "1", "0"}, {"0", "alpha^2", "0", "1"}}), "G1");
    o.require(c2.generator == mat(R, {{"alpha^2", "0", "1", "0"}, {"0", "alpha", "0", "1"}}), "G2");
    o.require(c3.generator == mat(R, {{"1", "1", "0", "0"}, {"0", "1", "1", "0"}, {"0", "0", "1", "1"}}), "G3");
    o.require(c4.generator == mat(R, {{"1", "1", "1", "1"}}), "G4");
    const std::vector<std::pair<const PrincipalSkewCode*, Matrix>> parity = {
        {&c1, mat(R, {{"1", "0", "alpha", "0"}, {"0", "1", "0", "alpha^2"}})},
        {&c2, mat(R, {{"1", "0", "alpha^2", "0"}, {"0", "1", "0", "alpha"}})},
        {&c3, mat(R, {{"1", "1", "1", "1"}})},
        {&c4, mat(R, {{"1", "1", "0", "0"}, {"0", "1", "1", "0"}, {"0", "0", "1", "1"}})}};
    for (std::size_t j = 0; j < parity.size(); ++j) {
      const auto& [c, expected] = parity[j];
      const std::string tag = std::to_string(j + 1);
      if (!c->parity) {
        o.require(false, "H" + tag + " missing");
        continue;
      }
      o.require(*c->parity == expected, "H" + tag + " = " + c->parity->to_string());
      o.require((c->generator * c->parity->transpose()).is_zero(), "G" + tag + " H" + tag + "^T != 0");
    }
  });

  criterion("AC5", "Z4 instance: D, minimum words, bound, distance, no witness", [&](Outcome& o) {
    const auto z = examples::z4_instance();
    const Ring& R = z.ring;
    const auto fam = row_codes(z.a, limits);
    o.require(fam.distances == std::vector<std::size_t>{1, 1}, "D1, D2");
    o.require(z.cl1.minimum_weight_words(limits) == std::vector<Word>{testutil::word(R, {"2", "0", "0"})},
              "C_L1 minimum words");
    o.require(z.cl2.minimum_weight_words(limits) ==
                  std::vector<Word>{testutil::word(R, {"0", "0", "2"}), testutil::word(R, {"2", "0", "0"})},
              "C_L2 minimum words");
    const std::vector<LinearCode> in{z.cl2, z.cl1};
    o.require(distance_lower_bound(in, z.a, limits) == 1, "bound != 1");
    const auto mpc = build_mpc(in, z.a);
    const auto d = oracle::min_distance_by_coefficients(mpc.realized().generators(), limits);
    o.require(d && *d == 1, "brute-force distance != 1");
    o.require(sharpness_witness(in, z.a, limits).status == SharpnessStatus::NoWitness, "witness found");
  });

  const auto t6 = Clock::now();
  const auto bound = properties::run_suite("bound", 0, properties::default_count("bound"), limits);
  const double bound_seconds = seconds_since(t6);

  criterion("AC6", "distance bound property suite", [&](Outcome& o) {
    const std::size_t checked = tally(bound, "bound holds");
    o.note = std::to_string(checked) + " instances, " + std::to_string(tally(bound, "witness found")) +
             " with witness, suite ran in " + std::to_string(bound_seconds) + " s";
    o.require(bound.ok(), bound.ok() ? "" : bound.counterexamples.front());
    o.require(checked >= 100, "fewer than 100 instances checked");
    o.require(checked == bound.passed, "bound not satisfied everywhere");
    o.require(tally(bound, "witness => equality") == tally(bound, "witness found"), "witness without equality");
    o.require(bound_seconds < 300.0, "took " + std::to_string(bound_seconds) + " s");
  });

  criterion("AC7", "dual formula against enumerated duals", [&](Outcome& o) {
    const auto r = properties::run_suite("dual", 0, properties::default_count("dual"), limits);
    const std::size_t small = tally(r, "Z4 or GF(4) instance");
    o.note = std::to_string(small) + " instances over Z4 or GF(4), " + std::to_string(r.passed) + " in total";
    o.require(r.ok(), r.ok() ? "" : r.counterexamples.front());
    o.require(small >= 50, "fewer than 50 instances over Z4 or GF(4)");
    o.require(tally(r, "formula = enumerated dual") == r.cases, "not every case compared");
  });

  criterion("AC8", "self-dual, self-orthogonal and LCD biconditionals", [&](Outcome& o) {
    const auto r = properties::run_suite("selfdual", 0, properties::default_count("selfdual"), limits);
    o.note = std::to_string(r.passed) + "/" + std::to_string(r.cases) + " instances, " +
             std::to_string(tally(r, "self-dual MPC")) + " self-dual, " + std::to_string(tally(r, "LCD MPC")) +
             " LCD";
    o.require(r.ok(), r.ok() ? "" : r.counterexamples.front());
    o.require(r.passed == r.cases && r.cases > 0, "cases skipped");
  });

  criterion("AC9", "cardinality of full-rank matrix-product codes", [&](Outcome& o) {
    const std::size_t n = tally(bound, "|MPC| = prod |Ci|");
    o.note = std::to_string(n) + " instances enumerated";
    o.require(n == bound.passed && n >= 100, "cardinality not confirmed on every instance");
  });

  criterion("AC10", "skew division round trips and row semantics", [&](Outcome& o) {
    const auto r = properties::run_suite("division", 0, 1000, limits);
    o.require(r.ok(), r.ok() ? "" : r.counterexamples.front());
    o.require(tally(r, "right round trip") == 1000, "right round trips");
    o.require(tally(r, "left round trip") + tally(r, "left skipped (sigma not invertible)") == 1000,
              "left round trips");
    const auto ex = examples::swap_instance();
    const auto s1 = examples::gf4_step1();
    std::vector<PrincipalSkewCode> codes = {principal_code(ex.g, ex.f), principal_code(s1.g1, s1.f1),
                                            principal_code(s1.h1, s1.f1)};
    for (const auto& [beta, frob] : std::vector<std::pair<std::string, bool>>{{"1", true}, {"alpha", false}}) {
      const auto s2 = examples::gf4_step2(beta, frob);
      codes.push_back(principal_code(s2.g2, s2.f2));
      codes.push_back(principal_code(s2.h2, s2.f2));
    }
    for (const auto& c : codes) o.require(row_semantics(c), "row semantics for g = " + c.g.to_string());
  });

  criterion("AC11", "Z20 investigation", [&](Outcome& o) {
    const auto v = examples::z20_investigation(limits);
    const auto z = examples::z20_instance();
    const auto primal = build_mpc({z.c1, z.c2}, z.a);
    o.require(v.primal_size == primal.realized().codewords(limits).size(), "primal enumeration incomplete");
    o.require(v.consistent, "|C| |C^perp| != |R|^n");
    o.note = "|[C1 C2]A| = " + std::to_string(v.primal_size) + ", |dual| = " + std::to_string(v.dual_size) +
             ", |formula side| = " + std::to_string(v.formula_size) + ", coincide: " + (v.coincide ? "yes" : "no") +
             ", (8,2) in [C1 C2]A: " + (v.contains_8_2 ? "yes" : "no");
    bool refused = false;
    try {
      mpc_dual({z.c1, z.c2}, z.a, limits);
    } catch (const PreconditionError&) {
      refused = true;
    }
    o.require(refused, "dual formula accepted non-free inputs");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
