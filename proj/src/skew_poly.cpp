#include "ringmpc/skew_poly.hpp"

#include <ostream>

#include "ringmpc/errors.hpp"
#include "ringmpc/expr.hpp"

namespace ringmpc {

// ---- context ----

SkewContext::SkewContext(RingMap sigma, RingMap delta, std::optional<RingMap> inv,
                         std::string name)
    : sigma_(std::move(sigma)),
      delta_(std::move(delta)),
      sigma_inv_(std::move(inv)),
      name_(std::move(name)) {}

SkewContextPtr SkewContext::create(RingMap sigma, std::optional<RingMap> delta,
                                   std::string name) {
  if (sigma.role() != MapRole::Endomorphism)
    throw PreconditionError("sigma must be an endomorphism");
  RingMap d = delta ? *delta : RingMap::zero_derivation(sigma);
  if (d.role() != MapRole::Derivation) throw PreconditionError("delta must be a derivation");
  if (!(d.sigma() == sigma))
    throw PreconditionError("delta is attached to a different endomorphism than sigma");
  std::optional<RingMap> inv = sigma.inverse();
  if (inv) {
    const RingMap id = RingMap::identity(sigma.ring());
    if (!(sigma.compose(*inv) == id) || !(inv->compose(sigma) == id))
      throw AxiomViolation("computed inverse of sigma is not two-sided", 0, 0);
  }
  return SkewContextPtr(new SkewContext(std::move(sigma), std::move(d), std::move(inv),
                                        std::move(name)));
}

const RingMap& SkewContext::sigma_inverse() const {
  if (!sigma_inv_) throw PreconditionError("sigma is not an automorphism");
  return *sigma_inv_;
}

Elem SkewContext::sigma_power(Elem a, long k) const {
  const RingMap& m = k >= 0 ? sigma_ : sigma_inverse();
  for (long i = 0, e = k >= 0 ? k : -k; i < e; ++i) a = m(a);
  return a;
}

// ---- polynomials ----

namespace {

Word trimmed(Word c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// X * p, coefficientwise: sum sigma(b_j) X^{j+1} + delta(b_j) X^j.
Word times_x(const SkewContext& ctx, const Word& b) {
  const Ring& R = ctx.ring();
  Word out(b.size() + 1, 0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    out[j + 1] = R.add(out[j + 1], ctx.sigma()(b[j]));
    out[j] = R.add(out[j], ctx.delta()(b[j]));
  }
  return out;
}

struct PolyDomain {
  using Value = SkewPoly;
  SkewContextPtr ctx;
  const std::function<std::optional<Elem>(std::string_view)>& names;

  Value from_int(std::int64_t v) const { return SkewPoly::constant(ctx, ctx->ring().from_int(v)); }
  std::optional<Value> name(std::string_view n) const {
    if (n == "X" || n == "x") return SkewPoly::x(ctx);
    if (names)
      if (auto e = names(n)) return SkewPoly::constant(ctx, *e);
    try {
      return SkewPoly::constant(ctx, ctx->ring().parse(n));
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  Value tuple(std::span<const std::string_view> parts) const {
    std::string text = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "," : "") + std::string(parts[i]);
    text += ")";
    return SkewPoly::constant(ctx, ctx->ring().parse(text, names));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, std::uint64_t e) const {
    Value r = SkewPoly::constant(ctx, ctx->ring().one());
    for (std::uint64_t i = 0; i < e; ++i) r = r * a;
    return r;
  }
};

void require_monic(const SkewPoly& g, const char* what) {
  if (!g.is_monic()) throw PreconditionError(std::string(what) + " must be monic");
}

}  // namespace

SkewPoly::SkewPoly(SkewContextPtr ctx, Word coeffs) : ctx_(std::move(ctx)), c_(trimmed(std::move(coeffs))) {
  if (!ctx_) throw PreconditionError("skew polynomial needs a context");
  for (Elem e : c_)
    if (e >= ctx_->ring().size()) throw PreconditionError("coefficient out of range");
}

SkewPoly SkewPoly::zero(SkewContextPtr ctx) { return SkewPoly(std::move(ctx), {}); }

SkewPoly SkewPoly::constant(SkewContextPtr ctx, Elem c) { return SkewPoly(std::move(ctx), {c}); }

SkewPoly SkewPoly::monomial(SkewContextPtr ctx, Elem c, std::size_t degree) {
  Word w(degree + 1, 0);
  w[degree] = c;
  return SkewPoly(std::move(ctx), std::move(w));
}

SkewPoly SkewPoly::x(SkewContextPtr ctx) {
  const Elem one = ctx->ring().one();
  return monomial(std::move(ctx), one, 1);
}

SkewPoly SkewPoly::parse(SkewContextPtr ctx, std::string_view text,
                         const std::function<std::optional<Elem>(std::string_view)>& names) {
  PolyDomain dom{std::move(ctx), names};
  return expr::parse(text, dom);
}

bool SkewPoly::is_monic() const { return !c_.empty() && c_.back() == ring().one(); }

void SkewPoly::check_same(const SkewPoly& o) const {
  if (ctx_ != o.ctx_) throw RingMismatch("skew polynomials from different contexts");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  check_same(o);
  const Ring& R = ring();
  Word w(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = R.add(coeff(i), o.coeff(i));
  return SkewPoly(ctx_, std::move(w));
}

SkewPoly SkewPoly::operator-() const {
  Word w = c_;
  for (auto& e : w) e = ring().neg(e);
  return SkewPoly(ctx_, std::move(w));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  const Ring& R = ring();
  Word acc(c_.size() + o.c_.size(), 0);
  Word cur = o.c_;  // X^i * o
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0)
      for (std::size_t j = 0; j < cur.size(); ++j) acc[j] = R.add(acc[j], R.mul(c_[i], cur[j]));
    if (i + 1 < c_.size()) cur = times_x(*ctx_, cur);
  }
  return SkewPoly(ctx_, std::move(acc));
}

bool SkewPoly::operator==(const SkewPoly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

std::string SkewPoly::to_string() const {
  if (c_.empty()) return "0";
  const Ring& R = ring();
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = R.format(c_[i]);
    if (c_.size() > 1 && c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c_[i] != R.one()) out += c + "*";
    out += i == 1 ? "X" : "X^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SkewPoly& p) { return os << p.to_string(); }

// ---- division ----

SkewDivision right_divmod(const SkewPoly& p, const SkewPoly& g) {
  require_monic(g, "divisor");
  const auto& ctx = p.context();
  if (ctx != g.context()) throw RingMismatch("skew polynomials from different contexts");
  SkewPoly q = SkewPoly::zero(ctx);
  SkewPoly r = p;
  // (c X^m) g has leading term c sigma^m(1) X^{m+d} = c X^{m+d}.
  while (r.degree() >= g.degree()) {
    const SkewPoly t =
        SkewPoly::monomial(ctx, r.leading(), static_cast<std::size_t>(r.degree() - g.degree()));
    r = r - t * g;
    q = q + t;
  }
  return {q, r};
}

SkewDivision left_divmod(const SkewPoly& p, const SkewPoly& g) {
  require_monic(g, "divisor");
  const auto& ctx = p.context();
  if (ctx != g.context()) throw RingMismatch("skew polynomials from different contexts");
  if (!ctx->sigma_invertible())
    throw PreconditionError("left division needs sigma to be an automorphism");
  SkewPoly q = SkewPoly::zero(ctx);
  SkewPoly r = p;
  // g (c X^m) has leading term sigma^d(c) X^{d+m}.
  while (r.degree() >= g.degree()) {
    const Elem c = ctx->sigma_power(r.leading(), -g.degree());
    const SkewPoly t = SkewPoly::monomial(ctx, c, static_cast<std::size_t>(r.degree() - g.degree()));
    r = r - g * t;
    q = q + t;
  }
  return {q, r};
}

// ---- companion machinery ----

Matrix companion_matrix(const SkewPoly& f) {
  require_monic(f, "f");
  const Ring& R = f.ring();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 0) throw PreconditionError("f must have positive degree");
  Matrix c(R, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = R.one();
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = R.neg(f.coeff(j));
  return c;
}

Word apply_tf(std::span<const Elem> t, const SkewPoly& f) {
  const Matrix c = companion_matrix(f);
  if (t.size() != c.rows()) throw DimensionError("vector length must equal deg f");
  const auto& ctx = *f.context();
  Word out = vec_mat(ctx.sigma().apply(t), c);
  const Ring& R = f.ring();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(out[i], ctx.delta()(t[i]));
  return out;
}

Word phi_coordinates(const SkewPoly& p, const SkewPoly& f) {
  Word w = right_divmod(p, f).remainder.coefficients();
  w.resize(static_cast<std::size_t>(f.degree()), 0);
  return w;
}

// ---- principal codes ----

Matrix principal_generator(const SkewPoly& g, const SkewPoly& f) {
  require_monic(f, "f");
  require_monic(g, "g");
  if (g.context() != f.context()) throw RingMismatch("g and f from different contexts");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const long d = g.degree();
  if (d < 1 || static_cast<std::size_t>(d) >= n)
    throw PreconditionError("need 1 <= k <= n-1, i.e. 1 <= deg g < deg f");
  if (!right_divmod(f, g).remainder.is_zero())
    throw PreconditionError("g is not a right divisor of f");
  const std::size_t k = n - static_cast<std::size_t>(d);
  const auto& ctx = *g.context();
  const Ring& R = g.ring();
  Matrix m(R, k, n);
  Word prev(n, 0);
  for (long t = 0; t <= d; ++t) prev[static_cast<std::size_t>(t)] = g.coeff(static_cast<std::size_t>(t));
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) {
      Word next(n, 0);
      next[0] = ctx.delta()(prev[0]);
      for (std::size_t t = 1; t < n; ++t)
        next[t] = R.add(ctx.delta()(prev[t]), ctx.sigma()(prev[t - 1]));
      prev = std::move(next);
    }
    for (std::size_t t = 0; t < n; ++t) m(i, t) = prev[t];
  }
  return m;
}

Matrix dual_parity_matrix(const SkewPoly& g, const SkewPoly& h, const SkewPoly& f) {
  const auto& ctx = *f.context();
  if (!ctx.sigma_invertible()) throw PreconditionError("sigma must be an automorphism");
  require_monic(f, "f");
  if (g.context() != f.context() || h.context() != f.context())
    throw RingMismatch("g, h and f from different contexts");
  if (!(g * h == f)) throw PreconditionError("f is not the product g h");
  if (!right_divmod(f, g).remainder.is_zero())
    throw PreconditionError("g is not a right divisor of f");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const long kl = h.degree();
  if (kl < 1 || static_cast<std::size_t>(kl) >= n) throw PreconditionError("need 1 <= deg h < n");
  const std::size_t k = static_cast<std::size_t>(kl);
  const Ring& R = f.ring();

  Matrix out(R, n - k, n);
  Word prev(n, 0);
  for (std::size_t t = 0; t <= k; ++t) prev[t] = h.coeff(t);
  for (std::size_t c = 0; c < n; ++c) {
    if (c > 0) {
      Word next(n, 0);
      const bool reduce = c >= n - k;
      const Elem top = ctx.sigma()(prev[n - 1]);
      for (std::size_t t = 0; t < n; ++t) {
        Elem v = ctx.delta()(prev[t]);
        if (t > 0) v = R.add(v, ctx.sigma()(prev[t - 1]));
        if (reduce) v = R.sub(v, R.mul(f.coeff(t), top));
        next[t] = v;
      }
      prev = std::move(next);
    }
    for (std::size_t r = 0; r < n - k; ++r) out(r, c) = prev[k + r];
  }
  return out;
}

PrincipalSkewCode principal_code(const SkewPoly& g, const SkewPoly& f) {
  Matrix gen = principal_generator(g, f);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t k = gen.rows();
  LinearCode realized(gen);
  std::optional<SkewPoly> h;
  std::optional<Matrix> parity;
  if (f.context()->sigma_invertible()) {
    auto [q, r] = left_divmod(f, g);
    if (r.is_zero()) {
      parity = dual_parity_matrix(g, q, f);
      h = std::move(q);
    }
  }
  return PrincipalSkewCode{g, f, n, k, std::move(gen), std::move(realized), std::move(h),
                           std::move(parity)};
}

SkewPoly skew_reciprocal(const SkewPoly& h) {
  if (h.is_zero()) return h;
  const auto& ctx = *h.context();
  const std::size_t k = static_cast<std::size_t>(h.degree());
  Word w(k + 1, 0);
  for (std::size_t i = 0; i <= k; ++i) w[i] = ctx.sigma_power(h.coeff(k - i), static_cast<long>(i));
  return SkewPoly(h.context(), std::move(w));
}

SelfDualCriteria constacyclic_selfdual_criteria(const SkewPoly& g, const SkewPoly& f,
                                                const Limits& limits) {
  const auto& ctxp = f.context();
  const auto& ctx = *ctxp;
  const Ring& R = f.ring();
  if (g.context() != ctxp) throw RingMismatch("g and f from different contexts");
  if (!ctx.delta_is_zero()) throw PreconditionError("criteria require delta = 0");
  if (!ctx.sigma_invertible()) throw PreconditionError("criteria require sigma to be an automorphism");
  require_monic(f, "f");
  const long nl = f.degree();
  for (long i = 1; i < nl; ++i)
    if (f.coeff(static_cast<std::size_t>(i)) != 0)
      throw PreconditionError("f must have the form X^n - a");
  SelfDualCriteria out;
  out.a = R.neg(f.coeff(0));
  if (!R.is_unit(out.a)) throw PreconditionError("constant a in X^n - a must be a unit");
  if (nl % 2 != 0) throw PreconditionError("n must be even");
  const std::size_t n = static_cast<std::size_t>(nl);
  const std::size_t k = n / 2;
  if (g.degree() != static_cast<long>(k)) throw PreconditionError("deg g must be n/2");
  require_monic(g, "g");
  if (!R.is_unit(g.coeff(0))) throw PreconditionError("g_0 must be a unit");
  if (!right_divmod(f, g).remainder.is_zero())
    throw PreconditionError("g is not a right divisor of X^n - a");

  // cond1
  Word target(n + 1, 0);
  target[n] = R.one();
  target[0] = R.neg(ctx.sigma_power(out.a, -static_cast<long>(k)));
  auto [h, r] = left_divmod(SkewPoly(ctxp, target), g);
  if (r.is_zero()) {
    if (auto inv = R.inverse(h.coeff(0))) {
      const Elem c = ctx.sigma_power(*inv, static_cast<long>(k));
      out.cond1 = SkewPoly::constant(ctxp, c) * skew_reciprocal(h) == g;
    }
    out.h = std::move(h);
  }

  // cond2, one literal sum per l
  for (std::size_t l = 0; l <= k; ++l) {
    Elem s = 0;
    for (std::size_t i = 0; i <= l; ++i)
      s = R.add(s, R.mul(ctx.sigma_power(g.coeff(i), static_cast<long>(k) - 1),
                         g.coeff(i + k - l)));
    out.cond2_sums.push_back(s);
    out.cond2_per_l.push_back(s == 0);
  }

  out.direct = LinearCode(principal_generator(g, f)).duality(limits).self_dual;
  return out;
}

MatrixProductCode build_skew_mpc(const std::vector<PrincipalSkewCode>& codes, const Matrix& a) {
  std::vector<LinearCode> inputs;
  for (const auto& c : codes) inputs.push_back(c.realized);
  return build_mpc(std::move(inputs), a);
}

MatrixProductCode skew_mpc_dual(const std::vector<PrincipalSkewCode>& codes, const Matrix& a,
                                const Limits& limits) {
  if (!a.is_square()) throw PreconditionError("dual construction needs a square matrix");
  auto inv = inverse(a, limits);
  if (!inv) throw PreconditionError("matrix is singular (determinant is not a unit)");
  std::vector<LinearCode> inputs;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (!codes[i].parity)
      throw PreconditionError("code " + std::to_string(i + 1) +
                              " has no parity matrix (needs sigma invertible and f = g h)");
    inputs.emplace_back(*codes[i].parity);
  }
  return build_mpc(std::move(inputs), inv->transpose());
}

}  // namespace ringmpc
