#include "ringmpc/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "ringmpc/errors.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/oracle.hpp"
#include "ringmpc/skew_poly.hpp"

namespace ringmpc::properties {

namespace {

using Rng = std::mt19937_64;

Rng case_rng(std::uint64_t seed, std::string_view suite, std::size_t index) {
  std::uint32_t tag = 2166136261u;
  for (char c : suite) tag = (tag ^ static_cast<unsigned char>(c)) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag,
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

// Plain modulo keeps draws identical across standard libraries.
std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Elem any_elem(Rng& rng, const Ring& r) { return static_cast<Elem>(below(rng, r.size())); }

Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = any_elem(rng, r);
  return m;
}

Matrix random_full_rank(const Ring& r, std::size_t rows, std::size_t cols, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(r, rows, cols, rng);
    if (is_full_rank(m)) return m;
  }
}

Matrix random_nonsingular(const Ring& r, std::size_t s, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(r, s, s, rng);
    if (is_nonsingular(m)) return m;
  }
}

Word random_unit_list(const Ring& r, std::size_t s, Rng& rng) {
  Word out;
  while (out.size() < s) {
    const Elem e = any_elem(rng, r);
    if (r.is_unit(e)) out.push_back(e);
  }
  return out;
}

Matrix random_quasi_orthogonal(const Ring& r, std::size_t s, Rng& rng) {
  for (int tries = 0; tries < 4000; ++tries) {
    Matrix m = random_matrix(r, s, s, rng);
    if (is_quasi_orthogonal(m)) return m;
  }
  // Scaled permutation matrices are always quasi-orthogonal.
  std::vector<std::size_t> perm(s);
  for (std::size_t i = 0; i < s; ++i) perm[i] = i;
  for (std::size_t i = s; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  const Word u = random_unit_list(r, s, rng);
  Matrix m(r, s, s);
  for (std::size_t i = 0; i < s; ++i) m(i, perm[i]) = u[i];
  return m;
}

std::string describe(const std::vector<LinearCode>& inputs, const Matrix& a) {
  std::ostringstream os;
  os << "ring " << a.ring().name() << "; ";
  for (std::size_t i = 0; i < inputs.size(); ++i)
    os << "C" << i + 1 << " gens " << inputs[i].generators().to_string() << "; ";
  os << "A " << a.to_string();
  std::string s = os.str();
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::optional<std::size_t> min_weight(const std::vector<Word>& words) {
  std::optional<std::size_t> best;
  for (const auto& w : words) {
    const std::size_t wt = hamming_weight(w);
    if (wt && (!best || wt < *best)) best = wt;
  }
  return best;
}

double ambient_size(const Ring& r, std::size_t len) {
  double v = 1;
  for (std::size_t i = 0; i < len; ++i) v *= static_cast<double>(r.size());
  return v;
}

Count power(std::size_t q, std::size_t n) {
  Count c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= q;
  return c;
}

class Tally {
 public:
  explicit Tally(SuiteResult& res) : res_(res) {}
  void bump(const std::string& name, std::size_t by = 1) {
    for (auto& [k, v] : res_.tallies)
      if (k == name) {
        v += by;
        return;
      }
    res_.tallies.emplace_back(name, by);
  }
  void declare(const std::vector<const char*>& names) {
    for (const char* n : names) bump(n, 0);
  }

 private:
  SuiteResult& res_;
};

enum class Verdict { Pass, Fail, Skip };

Verdict verdict(const std::vector<std::string>& bad) { return bad.empty() ? Verdict::Pass : Verdict::Fail; }

Ring f3xf3() { return Ring::product({Ring::integers_mod(3), Ring::integers_mod(3)}); }

// ---------------------------------------------------------------- bound

// Distance bound, sharpness, cardinality and block independence.
Verdict bound_case(Rng& rng, std::size_t index, const Limits& limits, SuiteResult& res, Tally& t) {
  static const std::vector<Ring> rings = {Ring::integers_mod(4), Ring::integers_mod(6),
                                          Ring::galois_field(2, 2), f3xf3()};
  const Ring& R = rings[index % rings.size()];
  const std::size_t s = 1 + below(rng, 3);
  const std::size_t l = s + below(rng, 4 - s);
  const std::size_t n = 1 + below(rng, 4);
  const Matrix a = random_full_rank(R, s, l, rng);
  std::vector<LinearCode> inputs;
  std::vector<std::vector<Word>> words;
  double combos = 1;
  for (std::size_t i = 0; i < s; ++i) {
    inputs.emplace_back(random_matrix(R, 1 + below(rng, 2), n, rng));
    words.push_back(inputs.back().codewords(limits));
    combos *= static_cast<double>(words.back().size());
  }
  if (combos > static_cast<double>(limits.codewords) * 4) return Verdict::Skip;
  bool all_zero = true;
  for (const auto& c : inputs) all_zero = all_zero && c.is_zero();
  if (all_zero) return Verdict::Skip;

  const std::string inst = describe(inputs, a);
  std::vector<std::string> bad;
  const std::size_t bound = distance_lower_bound(inputs, a, limits);
  const auto enumerated = oracle::mpc_by_enumeration(words, a, limits);
  const auto exact = min_weight(enumerated);
  const auto mpc = build_mpc(inputs, a);

  if (!exact) {
    bad.push_back("MPC enumerated as zero though an input is nonzero");
  } else {
    if (*exact >= bound) t.bump("bound holds");
    else bad.push_back("d=" + std::to_string(*exact) + " < bound=" + std::to_string(bound));
    if (*exact == bound) t.bump("bound attained");
    if (mpc.realized().min_distance(limits) != *exact) bad.push_back("structured distance differs");
  }

  Count product = 1;
  for (const auto& w : words) product *= w.size();
  if (Count(enumerated.size()) == product && mpc.realized().cardinality() == product)
    t.bump("|MPC| = prod |Ci|");
  else
    bad.push_back("cardinality " + std::to_string(enumerated.size()) + " vs product " +
                  product.str());
  if (mpc.realized().codewords(limits) != enumerated) bad.push_back("block generator span differs");

  const auto sw = sharpness_witness(inputs, a, limits);
  if (sw.status == SharpnessStatus::Witness) {
    t.bump("witness found");
    if (exact && *exact == bound) t.bump("witness => equality");
    else bad.push_back("witness found but d != bound");
  } else if (sw.status == SharpnessStatus::NoWitness) {
    t.bump("nested, no witness");
  } else {
    t.bump("not nested");
  }

  bool free_inputs = true;
  std::size_t rank_sum = 0;
  for (const auto& c : inputs) {
    free_inputs = free_inputs && c.generators_independent();
    rank_sum += c.generators().rows();
  }
  if (free_inputs) {
    const auto fr = mpc.realized().freeness();
    if (left_kernel(mpc.realized().generators()).is_zero() && fr.free && fr.rank == rank_sum)
      t.bump("free inputs => free MPC, independent blocks");
    else
      bad.push_back("free inputs but block rows dependent or rank != sum k_i");
  }
  for (const auto& b : bad) res.counterexamples.push_back("case " + std::to_string(index) + ": " + b + " [" + inst + "]");
  return verdict(bad);
}

// ---------------------------------------------------------------- dual

Verdict dual_case(Rng& rng, std::size_t index, const Limits& limits, SuiteResult& res, Tally& t) {
  static const std::vector<Ring> rings = {Ring::integers_mod(4), Ring::galois_field(2, 2),
                                          Ring::integers_mod(20)};
  const Ring& R = rings[index % rings.size()];
  const double cap = R.size() == 20 ? 2e5 : 7e4;
  std::size_t s = 0, n = 0;
  do {
    s = 1 + below(rng, 3);
    n = 1 + below(rng, 4);
  } while (ambient_size(R, s * n) > cap);
  const Matrix a = random_nonsingular(R, s, rng);
  std::vector<LinearCode> inputs;
  for (std::size_t i = 0; i < s; ++i)
    inputs.emplace_back(random_full_rank(R, 1 + below(rng, n), n, rng));
  const auto mpc = build_mpc(inputs, a);
  const auto formula = mpc_dual(inputs, a, limits);
  const auto enumerated = oracle::dual_by_enumeration(mpc.realized().generators(), limits);
  std::vector<std::string> bad;
  if (formula.realized().codewords(limits) == enumerated) t.bump("formula = enumerated dual");
  else bad.push_back("formula side differs from enumerated dual");
  if (code_equals(formula.realized(), mpc.realized().dual())) t.bump("formula = structured dual");
  else bad.push_back("formula side differs from structured dual");
  if (bad.empty() && R.size() == 4) t.bump("Z4 or GF(4) instance");
  for (const auto& b : bad)
    res.counterexamples.push_back("case " + std::to_string(index) + ": " + b + " [" + describe(inputs, a) + "]");
  return verdict(bad);
}

// ---------------------------------------------------------------- selfdual

LinearCode pool_code(const Ring& R, std::size_t n, Rng& rng) {
  switch (below(rng, 4)) {
    case 0:
      return LinearCode::full_space(R, n);
    case 1: {
      // A self-orthogonal vector, found by rejection.
      for (int tries = 0; tries < 200; ++tries) {
        Matrix m = random_matrix(R, 1, n, rng);
        if (inner_product(R, m.row(0), m.row(0)) == 0) return LinearCode(m);
      }
      return LinearCode::zero(R, n);
    }
    case 2:
      if (R.size() == 4 && R.kind() == RingKind::IntegersMod)
        return LinearCode(Matrix::identity(R, n).scaled(2));  // 2 Z4^n is self-dual
      [[fallthrough]];
    default:
      return LinearCode(random_matrix(R, 1 + below(rng, 2), n, rng));
  }
}

struct SetDuality {
  bool so, sd, lcd;
};

// Duality class of [C]A from enumeration only: the code is enumerated from
// the input codewords, its dual by scanning the ambient space.
SetDuality enumerated_duality(const std::vector<LinearCode>& inputs, const Matrix& a,
                              const Limits& limits) {
  const Ring& R = a.ring();
  std::vector<std::vector<Word>> words;
  for (const auto& c : inputs) words.push_back(c.codewords(limits));
  const auto primal = oracle::mpc_by_enumeration(words, a, limits);
  // Spanning set: single-column images of the input generators.
  std::vector<Word> span;
  const std::size_t n = inputs[0].length();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Matrix& g = inputs[i].generators();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      std::vector<Word> cols(inputs.size(), Word(n, 0));
      cols[i].assign(g.row(r).begin(), g.row(r).end());
      span.push_back(oracle::mpc_codeword(cols, a));
    }
  }
  Matrix sm = Matrix::from_rows(R, n * a.cols(), span);
  const auto dual = oracle::dual_by_enumeration(sm, limits);
  SetDuality d{};
  d.so = std::includes(dual.begin(), dual.end(), primal.begin(), primal.end());
  d.sd = primal == dual;
  std::vector<Word> meet;
  std::set_intersection(primal.begin(), primal.end(), dual.begin(), dual.end(),
                        std::back_inserter(meet));
  d.lcd = meet.size() == 1;
  return d;
}

Verdict selfdual_case(Rng& rng, std::size_t index, const Limits& limits, SuiteResult& res,
                   Tally& t) {
  static const std::vector<Ring> rings = {Ring::integers_mod(4), f3xf3()};
  const Ring& R = rings[index % rings.size()];
  const double cap = R.size() == 4 ? 7e4 : 6e5;
  std::size_t s = 0, n = 0;
  do {
    s = 1 + below(rng, R.size() == 4 ? 3 : 2);
    n = 1 + below(rng, 4);
  } while (ambient_size(R, s * n) > cap);
  const Matrix a = random_quasi_orthogonal(R, s, rng);
  std::vector<LinearCode> inputs;
  for (std::size_t i = 0; i < s; ++i) inputs.push_back(pool_code(R, n, rng));

  bool sd = true, so = true, lcd = true;
  for (const auto& c : inputs) {
    const auto d = c.duality(limits);
    sd = sd && d.self_dual;
    so = so && d.self_orthogonal;
    lcd = lcd && d.lcd;
  }
  const SetDuality m = enumerated_duality(inputs, a, limits);
  const auto rep = characterization_check(inputs, a, limits);
  std::vector<std::string> bad;
  if (m.sd != sd) bad.push_back("self-dual biconditional fails");
  if (m.so != so) bad.push_back("self-orthogonal biconditional fails");
  if (m.lcd != lcd) bad.push_back("LCD biconditional fails");
  if (m.sd != rep.mpc.self_dual || m.so != rep.mpc.self_orthogonal || m.lcd != rep.mpc.lcd)
    bad.push_back("structured duality class of the MPC disagrees with enumeration");
  if (m.sd) t.bump("self-dual MPC");
  if (m.so) t.bump("self-orthogonal MPC");
  if (m.lcd) t.bump("LCD MPC");
  if (!m.so && !m.lcd) t.bump("neither");
  for (const auto& b : bad)
    res.counterexamples.push_back("case " + std::to_string(index) + ": " + b + " [" + describe(inputs, a) + "]");
  return verdict(bad);
}

// ---------------------------------------------------------------- division

std::vector<SkewContextPtr> division_contexts() {
  auto gf4 = Ring::galois_field(2, 2);
  auto gf8 = Ring::galois_field(2, 3);
  auto r9 = f3xf3();
  auto z4 = Ring::integers_mod(4);
  auto fr4 = RingMap::frobenius(gf4);
  auto swap = RingMap::permute_components(r9, {1, 0});
  auto z2x2 = Ring::product({Ring::integers_mod(2), Ring::integers_mod(2)});
  std::vector<Elem> collapse;
  for (Elem e : z2x2.elements()) {
    const Word c = z2x2.components(e);
    const Elem v[2] = {c[0], c[0]};
    collapse.push_back(z2x2.from_components(v));
  }
  return {SkewContext::create(swap, std::nullopt, "F3xF3 swap"),
          SkewContext::create(fr4, std::nullopt, "GF(4) frobenius"),
          SkewContext::create(RingMap::identity(gf4), std::nullopt, "GF(4) identity"),
          SkewContext::create(fr4, RingMap::inner_derivation(fr4, gf4.generator()),
                              "GF(4) frobenius + inner derivation"),
          SkewContext::create(RingMap::frobenius(gf8), std::nullopt, "GF(8) frobenius"),
          SkewContext::create(RingMap::identity(z4), std::nullopt, "Z4 identity"),
          SkewContext::create(swap, RingMap::inner_derivation(swap, r9.parse("(1,0)")),
                              "F3xF3 swap + inner derivation"),
          SkewContext::create(RingMap::endomorphism_from_table(z2x2, collapse, "(x,y)->(x,x)"),
                              std::nullopt, "Z2xZ2 collapse")};
}

SkewPoly random_poly(const SkewContextPtr& c, std::size_t max_len, Rng& rng) {
  Word w(below(rng, max_len + 1));
  for (auto& e : w) e = any_elem(rng, c->ring());
  return SkewPoly(c, w);
}

SkewPoly random_monic(const SkewContextPtr& c, std::size_t deg, Rng& rng) {
  Word w(deg + 1);
  for (auto& e : w) e = any_elem(rng, c->ring());
  w[deg] = c->ring().one();
  return SkewPoly(c, w);
}

Verdict division_case(Rng& rng, std::size_t index, const Limits&, SuiteResult& res, Tally& t) {
  static const auto contexts = division_contexts();
  const auto& c = contexts[index % contexts.size()];
  const std::size_t d = 1 + below(rng, 4);
  const SkewPoly g = random_monic(c, d, rng);
  const SkewPoly q = random_poly(c, 5, rng);
  const SkewPoly r = random_poly(c, d, rng);  // at most d coefficients: deg r < d
  std::vector<std::string> bad;
  const auto rd = right_divmod(q * g + r, g);
  if (rd.quotient == q && rd.remainder == r) t.bump("right round trip");
  else bad.push_back("right division of q g + r");
  if (c->sigma_invertible()) {
    const auto ld = left_divmod(g * q + r, g);
    if (ld.quotient == q && ld.remainder == r) t.bump("left round trip");
    else bad.push_back("left division of g q + r");
  } else {
    t.bump("left skipped (sigma not invertible)");
  }
  const SkewPoly p = random_poly(c, 4, rng);
  if ((p * q) * g == p * (q * g) && p * (q + r) == p * q + p * r) t.bump("associative");
  else bad.push_back("associativity or distributivity");
  Word coords = phi_coordinates(p, g);
  SkewPoly xp = p;
  bool tf_ok = true;
  for (int i = 0; i < 3; ++i) {
    xp = SkewPoly::x(c) * xp;
    coords = apply_tf(coords, g);
    tf_ok = tf_ok && coords == phi_coordinates(xp, g);
  }
  if (tf_ok) t.bump("T_f matches X*");
  else bad.push_back("T_f iterate disagrees with multiplication by X");
  for (const auto& b : bad)
    res.counterexamples.push_back("case " + std::to_string(index) + " (" + c->name() + "): " + b +
                                  " q=" + q.to_string() + " g=" + g.to_string() +
                                  " r=" + r.to_string());
  return verdict(bad);
}

// ---------------------------------------------------------------- kernel

Verdict kernel_case(Rng& rng, std::size_t index, const Limits& limits, SuiteResult& res, Tally& t) {
  static const std::vector<Ring> rings = {
      Ring::integers_mod(4),  Ring::integers_mod(6),    Ring::integers_mod(8),
      Ring::integers_mod(20), Ring::galois_field(2, 2), f3xf3(),
      Ring::product({Ring::integers_mod(4), Ring::integers_mod(3)})};
  const Ring& R = rings[index % rings.size()];
  const std::size_t rows = 1 + below(rng, 3), cols = 1 + below(rng, 3);
  const Matrix a = random_matrix(R, rows, cols, rng);
  const auto s = left_kernel(a, KernelStrategy::Structured, limits);
  const auto e = left_kernel(a, KernelStrategy::Exhaustive, limits);
  const auto o = oracle::left_kernel_by_enumeration(a, limits);
  std::vector<std::string> bad;
  if (s.codewords(limits) == o && code_equals(s, e)) t.bump("structured = exhaustive");
  else bad.push_back("kernels differ");
  if (rows <= cols) {
    const bool fr = is_full_rank(a);
    if (fr == (o.size() == 1)) t.bump("full rank agrees");
    else bad.push_back("full-rank verdict");
    if (rows == cols) {
      if (fr == is_nonsingular(a) && fr == inverse(a).has_value()) t.bump("square equivalences");
      else bad.push_back("full rank / non-singular / invertible disagree");
    }
  }
  for (const auto& b : bad)
    res.counterexamples.push_back("case " + std::to_string(index) + ": " + b + " [ring " +
                                  R.name() + " A " + a.to_string() + "]");
  return verdict(bad);
}

// ---------------------------------------------------------------- codes

Verdict codes_case(Rng& rng, std::size_t index, const Limits& limits, SuiteResult& res, Tally& t) {
  static const std::vector<Ring> rings = {Ring::integers_mod(4), Ring::integers_mod(20),
                                          Ring::galois_field(2, 2), f3xf3(), Ring::integers_mod(6)};
  const Ring& R = rings[index % rings.size()];
  const std::size_t n = 1 + below(rng, 4), k = 1 + below(rng, 3);
  const bool make_free = below(rng, 2) == 0 && k <= n;
  const LinearCode c(make_free ? random_full_rank(R, k, n, rng) : random_matrix(R, k, n, rng));
  std::vector<std::string> bad;
  const auto span = oracle::span_by_coefficients(c.generators(), limits);
  if (c.codewords(limits) == span && c.cardinality() == Count(span.size())) t.bump("span agrees");
  else bad.push_back("span");
  const auto dual_words = oracle::dual_by_enumeration(c.generators(), limits);
  const LinearCode d = c.dual();
  if (d.codewords(limits) == dual_words) t.bump("dual agrees");
  else bad.push_back("dual");
  if (c.cardinality() * d.cardinality() == power(R.size(), n)) t.bump("|C||C^perp| = |R|^n");
  else bad.push_back("cardinality product");
  const auto fr = c.freeness();
  if (fr.free) {
    const auto dfr = d.freeness();
    if (dfr.free && dfr.rank == n - fr.rank && code_equals(d.dual(), c)) t.bump("free: dual free, bidual");
    else bad.push_back("free dual properties");
  }
  const auto od = oracle::min_distance_by_coefficients(c.generators(), limits);
  if (od ? (c.min_distance(limits) == *od) : c.is_zero()) t.bump("distance agrees");
  else bad.push_back("distance");
  const auto rep = c.duality(limits);
  if (!rep.self_dual || span == dual_words) t.bump("self-dual => C = C^perp");
  else bad.push_back("self-dual verdict");
  for (const auto& b : bad)
    res.counterexamples.push_back("case " + std::to_string(index) + ": " + b + " [ring " +
                                  R.name() + " G " + c.generators().to_string() + "]");
  return verdict(bad);
}

using CaseFn = Verdict (*)(Rng&, std::size_t, const Limits&, SuiteResult&, Tally&);

struct SuiteDef {
  CaseFn fn;
  std::size_t default_count;
  std::vector<const char*> tallies;
};

const std::map<std::string, SuiteDef, std::less<>>& registry() {
  static const std::map<std::string, SuiteDef, std::less<>> r = {
      {"bound", {&bound_case, 120, {"bound holds", "bound attained", "|MPC| = prod |Ci|", "witness found", "witness => equality", "nested, no witness", "not nested", "free inputs => free MPC, independent blocks"}}},
      {"dual", {&dual_case, 90, {"formula = enumerated dual", "formula = structured dual", "Z4 or GF(4) instance"}}},
      {"selfdual", {&selfdual_case, 80, {"self-dual MPC", "self-orthogonal MPC", "LCD MPC", "neither"}}},
      {"division", {&division_case, 1000, {"right round trip", "left round trip", "left skipped (sigma not invertible)", "associative", "T_f matches X*"}}},
      {"kernel", {&kernel_case, 200, {"structured = exhaustive", "full rank agrees", "square equivalences"}}},
      {"codes", {&codes_case, 150, {"span agrees", "dual agrees", "|C||C^perp| = |R|^n", "free: dual free, bidual", "distance agrees", "self-dual => C = C^perp"}}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bound", "dual", "selfdual", "division", "kernel", "codes"};
  return names;
}

std::size_t default_count(std::string_view suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw PreconditionError("unknown property suite '" + std::string(suite) + "'");
  return it->second.default_count;
}

SuiteResult run_suite(std::string_view suite, std::uint64_t seed, std::size_t count,
                      const Limits& limits) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw PreconditionError("unknown property suite '" + std::string(suite) + "'");
  SuiteResult res;
  res.name = std::string(suite);
  Tally t(res);
  t.declare(it->second.tallies);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = case_rng(seed, suite, i);
    ++res.cases;
    try {
      switch (it->second.fn(rng, i, limits, res, t)) {
        case Verdict::Pass: ++res.passed; break;
        case Verdict::Skip: ++res.skipped; break;
        case Verdict::Fail: break;
      }
    } catch (const BudgetExceeded&) {
      ++res.skipped;
    } catch (const std::exception& e) {
      res.counterexamples.push_back("case " + std::to_string(i) + ": exception: " + e.what());
    }
  }
  return res;
}

}  // namespace ringmpc::properties
