#include "ringmpc/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ringmpc/errors.hpp"
#include "ringmpc/expr.hpp"

namespace ringmpc {

namespace detail {

struct RingData {
  RingKind kind = RingKind::IntegersMod;
  std::size_t size = 0;
  std::string name;
  std::string key;
  Elem one = 1;
  std::uint32_t characteristic = 0;

  // integers mod m
  std::uint32_t m = 0;
  std::vector<std::uint32_t> prime_powers;  // CRT moduli
  std::vector<std::uint32_t> primes;        // prime of each CRT modulus
  std::vector<unsigned> exponents;
  std::vector<std::uint64_t> crt_coeff;

  // Galois field
  std::uint32_t p = 0;
  unsigned k = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<Elem> exp_table;  // exp_table[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_table;

  // product
  std::vector<Ring> factors;
  std::vector<std::size_t> strides;
  std::vector<std::size_t> local_counts;

  std::vector<Ring> locals;  // empty when the ring itself is local
  bool local = false;
  unsigned nilpotency = 1;

  // Cayley tables for small rings.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
};

}  // namespace detail

namespace {

using detail::RingData;

constexpr std::size_t kTableLimit = 256;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) return std::nullopt;
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- polynomials over F_p (ascending coefficient vectors) ----

using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-able b over F_p.
FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const auto lead_inv = *mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    trim(a);
  }
  return a;
}

bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FpPoly g(d + 1, 0);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (fp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// ---- structural arithmetic (no tables) ----

std::vector<std::uint32_t> gf_digits(const RingData& d, Elem a) {
  std::vector<std::uint32_t> c(d.k);
  for (unsigned i = 0; i < d.k; ++i) {
    c[i] = a % d.p;
    a /= d.p;
  }
  return c;
}

Elem gf_pack(const RingData& d, const std::vector<std::uint32_t>& c) {
  Elem v = 0;
  for (unsigned i = d.k; i-- > 0;) v = v * d.p + c[i];
  return v;
}

Elem gf_add(const RingData& d, Elem a, Elem b, bool subtract) {
  if (d.p == 2) return a ^ b;
  Elem v = 0, mul = 1;
  for (unsigned i = 0; i < d.k; ++i) {
    const std::uint32_t x = a % d.p, y = b % d.p;
    v += mul * (subtract ? (x + d.p - y) % d.p : (x + y) % d.p);
    a /= d.p;
    b /= d.p;
    mul *= d.p;
  }
  return v;
}

// Multiplication by polynomial product reduced modulo the modulus; used
// only while the log tables are being built.
Elem gf_mul_slow(const RingData& d, Elem a, Elem b) {
  const auto x = gf_digits(d, a), y = gf_digits(d, b);
  FpPoly prod(2 * d.k, 0);
  for (unsigned i = 0; i < d.k; ++i)
    for (unsigned j = 0; j < d.k; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % d.p);
  auto r = fp_mod(prod, d.modulus, d.p);
  r.resize(d.k, 0);
  return gf_pack(d, r);
}

Elem gf_mul(const RingData& d, Elem a, Elem b) {
  if (a == 0 || b == 0) return 0;
  const std::size_t order = d.size - 1;
  return d.exp_table[(d.log_table[a] + d.log_table[b]) % order];
}

}  // namespace

// Structural dispatch lives in these helpers so the table builder and the
// large-ring path share one implementation.
namespace {

Elem structural_add(const RingData& d, Elem a, Elem b);
Elem structural_mul(const RingData& d, Elem a, Elem b);
Elem structural_neg(const RingData& d, Elem a);

Word split(const RingData& d, Elem a) {
  Word c(d.factors.size());
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    c[i] = static_cast<Elem>(a / d.strides[i]);
    a = static_cast<Elem>(a % d.strides[i]);
  }
  return c;
}

Elem join(const RingData& d, const Word& c) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * d.strides[i];
  return static_cast<Elem>(v);
}

Elem structural_add(const RingData& d, Elem a, Elem b) {
  switch (d.kind) {
    case RingKind::IntegersMod:
      return static_cast<Elem>((std::uint64_t{a} + b) % d.m);
    case RingKind::GaloisField:
      return gf_add(d, a, b, false);
    case RingKind::Product: {
      auto x = split(d, a), y = split(d, b);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = d.factors[i].add(x[i], y[i]);
      return join(d, x);
    }
  }
  return 0;
}

Elem structural_mul(const RingData& d, Elem a, Elem b) {
  switch (d.kind) {
    case RingKind::IntegersMod:
      return static_cast<Elem>(std::uint64_t{a} * b % d.m);
    case RingKind::GaloisField:
      return gf_mul(d, a, b);
    case RingKind::Product: {
      auto x = split(d, a), y = split(d, b);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = d.factors[i].mul(x[i], y[i]);
      return join(d, x);
    }
  }
  return 0;
}

Elem structural_neg(const RingData& d, Elem a) {
  switch (d.kind) {
    case RingKind::IntegersMod:
      return a == 0 ? 0 : d.m - a;
    case RingKind::GaloisField:
      return gf_add(d, 0, a, true);
    case RingKind::Product: {
      auto x = split(d, a);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = d.factors[i].neg(x[i]);
      return join(d, x);
    }
  }
  return 0;
}

void build_tables(RingData& d) {
  if (d.size > kTableLimit) return;
  const std::size_t n = d.size;
  d.add_table.resize(n * n);
  d.mul_table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      d.add_table[a * n + b] =
          static_cast<std::uint16_t>(structural_add(d, static_cast<Elem>(a), static_cast<Elem>(b)));
      d.mul_table[a * n + b] =
          static_cast<std::uint16_t>(structural_mul(d, static_cast<Elem>(a), static_cast<Elem>(b)));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

Ring Ring::integers_mod(std::uint32_t m) {
  if (m < 2) throw PreconditionError("integers-mod-m requires m >= 2, got " + std::to_string(m));
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::IntegersMod;
  d->size = m;
  d->m = m;
  d->characteristic = m;
  d->name = "Z" + std::to_string(m);
  d->key = d->name;
  std::uint32_t rest = m;
  for (std::uint32_t q = 2; q * q <= rest; ++q) {
    if (rest % q) continue;
    std::uint32_t pp = 1;
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      pp *= q;
      ++e;
    }
    d->prime_powers.push_back(pp);
    d->primes.push_back(q);
    d->exponents.push_back(e);
  }
  if (rest > 1) {
    d->prime_powers.push_back(rest);
    d->primes.push_back(rest);
    d->exponents.push_back(1);
  }
  if (d->prime_powers.size() == 1) {
    d->local = true;
    d->nilpotency = d->exponents[0];
  } else {
    for (std::size_t i = 0; i < d->prime_powers.size(); ++i) {
      const std::uint64_t q = d->prime_powers[i];
      const std::uint64_t mi = m / q;
      d->crt_coeff.push_back(mi * *mod_inverse(static_cast<std::int64_t>(mi % q),
                                               static_cast<std::int64_t>(q)) % m);
      d->locals.push_back(Ring::integers_mod(static_cast<std::uint32_t>(q)));
    }
  }
  build_tables(*d);
  return Ring(std::move(d));
}

Ring Ring::galois_field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw PreconditionError("galois-field characteristic " + std::to_string(p) +
                                            " is not prime");
  if (k < 1) throw PreconditionError("galois-field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 24)) throw PreconditionError("galois-field too large");
  }
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::GaloisField;
  d->size = static_cast<std::size_t>(q);
  d->p = p;
  d->k = k;
  d->characteristic = p;
  d->local = true;
  d->nilpotency = 1;
  if (modulus.empty()) {
    const std::uint64_t count = q;  // p^k choices for the lower coefficients
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FpPoly f(k + 1, 0);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[k] = 1;
      if (fp_irreducible(f, p)) {
        modulus = f;
        break;
      }
    }
  } else {
    if (modulus.size() != k + 1) throw PreconditionError("galois-field modulus must have degree k");
    for (auto& c : modulus) {
      if (c >= p) throw PreconditionError("galois-field modulus coefficient out of range");
    }
    if (modulus.back() != 1) throw PreconditionError("galois-field modulus must be monic");
    if (!fp_irreducible(modulus, p))
      throw PreconditionError("galois-field modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  d->modulus = modulus;
  d->name = "GF(" + std::to_string(q) + ")";
  std::ostringstream key;
  key << "GF(" << p << "^" << k << ";";
  for (auto c : modulus) key << c << ",";
  key << ")";
  d->key = key.str();

  // Log tables from a primitive element found by search.
  const std::size_t order = d->size - 1;
  d->log_table.assign(d->size, 0);
  for (Elem g = 1; g < d->size; ++g) {
    std::vector<Elem> powers;
    powers.reserve(order);
    Elem x = 1;
    bool primitive = true;
    for (std::size_t i = 0; i < order; ++i) {
      if (i > 0 && x == 1) {
        primitive = false;
        break;
      }
      powers.push_back(x);
      x = gf_mul_slow(*d, x, g);
    }
    if (primitive && x == 1) {
      d->exp_table = std::move(powers);
      break;
    }
  }
  if (d->exp_table.size() != order) throw Error("internal: no primitive element found");
  for (std::size_t i = 0; i < order; ++i) d->log_table[d->exp_table[i]] = static_cast<std::uint32_t>(i);
  build_tables(*d);
  return Ring(std::move(d));
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.size() < 2) throw PreconditionError("product ring needs at least two factors");
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::Product;
  std::size_t size = 1;
  std::uint64_t ch = 1;
  std::string name, key = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    size *= factors[i].size();
    if (size > (1u << 24)) throw PreconditionError("product ring too large");
    ch = std::lcm(ch, std::uint64_t{factors[i].characteristic()});
    const bool nested = factors[i].kind() == RingKind::Product;
    name += (i ? "x" : "") + (nested ? "(" + factors[i].name() + ")" : factors[i].name());
    key += (i ? "x" : "") + factors[i].d_->key;
  }
  key += ")";
  d->size = size;
  d->characteristic = static_cast<std::uint32_t>(ch);
  d->name = name;
  d->key = key;
  d->strides.assign(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i-- > 0;)
    d->strides[i] = d->strides[i + 1] * factors[i + 1].size();
  for (const auto& f : factors) {
    auto loc = f.local_factors();
    d->local_counts.push_back(loc.size());
    d->locals.insert(d->locals.end(), loc.begin(), loc.end());
  }
  d->factors = std::move(factors);
  Word ones(d->factors.size());
  for (std::size_t i = 0; i < ones.size(); ++i) ones[i] = d->factors[i].one();
  d->one = join(*d, ones);
  build_tables(*d);
  return Ring(std::move(d));
}

// ---------------------------------------------------------------------------
// arithmetic

RingKind Ring::kind() const { return d_->kind; }
std::size_t Ring::size() const { return d_->size; }
const std::string& Ring::name() const { return d_->name; }
std::uint32_t Ring::characteristic() const { return d_->characteristic; }
Elem Ring::one() const { return d_->one; }

Elem Ring::from_int(std::int64_t v) const {
  switch (d_->kind) {
    case RingKind::IntegersMod: {
      const std::int64_t m = d_->m;
      return static_cast<Elem>(((v % m) + m) % m);
    }
    case RingKind::GaloisField: {
      const std::int64_t p = d_->p;
      return static_cast<Elem>(((v % p) + p) % p);
    }
    case RingKind::Product: {
      Word c(d_->factors.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = d_->factors[i].from_int(v);
      return join(*d_, c);
    }
  }
  return 0;
}

Elem Ring::add(Elem a, Elem b) const {
  if (!d_->add_table.empty()) return d_->add_table[a * d_->size + b];
  return structural_add(*d_, a, b);
}

Elem Ring::mul(Elem a, Elem b) const {
  if (!d_->mul_table.empty()) return d_->mul_table[a * d_->size + b];
  return structural_mul(*d_, a, b);
}

Elem Ring::neg(Elem a) const { return structural_neg(*d_, a); }

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<Elem> Ring::inverse(Elem a) const {
  switch (d_->kind) {
    case RingKind::IntegersMod: {
      auto r = mod_inverse(a, d_->m);
      if (!r) return std::nullopt;
      return static_cast<Elem>(*r);
    }
    case RingKind::GaloisField: {
      if (a == 0) return std::nullopt;
      const std::size_t order = d_->size - 1;
      return d_->exp_table[(order - d_->log_table[a]) % order];
    }
    case RingKind::Product: {
      auto c = split(*d_, a);
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto inv = d_->factors[i].inverse(c[i]);
        if (!inv) return std::nullopt;
        c[i] = *inv;
      }
      return join(*d_, c);
    }
  }
  return std::nullopt;
}

std::vector<Elem> Ring::elements() const {
  std::vector<Elem> v(d_->size);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

// ---------------------------------------------------------------------------
// text

std::string Ring::format(Elem a) const {
  switch (d_->kind) {
    case RingKind::IntegersMod:
      return std::to_string(a);
    case RingKind::GaloisField: {
      if (d_->k == 1) return std::to_string(a);
      if (a == 0) return "0";
      const auto c = gf_digits(*d_, a);
      std::string out;
      for (unsigned i = d_->k; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(c[i]);
          continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += "alpha";
        if (i > 1) out += "^" + std::to_string(i);
      }
      return out;
    }
    case RingKind::Product: {
      const auto c = split(*d_, a);
      std::string out = "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += d_->factors[i].format(c[i]);
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

struct ElementDomain {
  using Value = Elem;
  const Ring& ring;
  const std::function<std::optional<Elem>(std::string_view)>& names;

  Value from_int(std::int64_t v) const { return ring.from_int(v); }
  std::optional<Value> name(std::string_view n) const {
    if (ring.kind() == RingKind::GaloisField && n == "alpha") return ring.generator();
    if (names) return names(n);
    return std::nullopt;
  }
  Value tuple(std::span<const std::string_view> parts) const {
    if (ring.kind() != RingKind::Product)
      throw ParseError("tuple literal used for non-product ring " + ring.name());
    if (parts.size() != ring.factors().size())
      throw ParseError("tuple literal has " + std::to_string(parts.size()) +
                       " components, ring " + ring.name() + " has " +
                       std::to_string(ring.factors().size()));
    Word comps(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) comps[i] = ring.factors()[i].parse(parts[i]);
    return ring.from_components(comps);
  }
  Value add(Value a, Value b) const { return ring.add(a, b); }
  Value sub(Value a, Value b) const { return ring.sub(a, b); }
  Value mul(Value a, Value b) const { return ring.mul(a, b); }
  Value neg(Value a) const { return ring.neg(a); }
  Value pow(Value a, std::uint64_t e) const { return ring.pow(a, e); }
};

}  // namespace

Elem Ring::parse(std::string_view text,
                 const std::function<std::optional<Elem>(std::string_view)>& names) const {
  ElementDomain dom{*this, names};
  return expr::parse(text, dom);
}

// ---------------------------------------------------------------------------
// structure accessors

std::uint32_t Ring::prime() const {
  if (d_->kind != RingKind::GaloisField) throw PreconditionError(name() + " is not a Galois field");
  return d_->p;
}

unsigned Ring::degree() const {
  if (d_->kind != RingKind::GaloisField) throw PreconditionError(name() + " is not a Galois field");
  return d_->k;
}

const std::vector<std::uint32_t>& Ring::modulus() const {
  if (d_->kind != RingKind::GaloisField) throw PreconditionError(name() + " is not a Galois field");
  return d_->modulus;
}

Elem Ring::generator() const {
  if (d_->kind != RingKind::GaloisField) throw PreconditionError(name() + " is not a Galois field");
  if (d_->k == 1) return static_cast<Elem>((d_->p - d_->modulus[0]) % d_->p);
  return static_cast<Elem>(d_->p);
}

std::vector<std::uint32_t> Ring::coefficients(Elem a) const {
  if (d_->kind != RingKind::GaloisField) throw PreconditionError(name() + " is not a Galois field");
  return gf_digits(*d_, a);
}

Elem Ring::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (d_->kind != RingKind::GaloisField) throw PreconditionError(name() + " is not a Galois field");
  std::vector<std::uint32_t> c(d_->k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i < d_->k) {
      c[i] = coeffs[i] % d_->p;
    } else if (coeffs[i] % d_->p) {
      throw PreconditionError("coefficient vector longer than field degree");
    }
  }
  return gf_pack(*d_, c);
}

const std::vector<Ring>& Ring::factors() const {
  if (d_->kind != RingKind::Product) throw PreconditionError(name() + " is not a product ring");
  return d_->factors;
}

Word Ring::components(Elem a) const {
  if (d_->kind != RingKind::Product) throw PreconditionError(name() + " is not a product ring");
  return split(*d_, a);
}

Elem Ring::from_components(std::span<const Elem> comps) const {
  if (d_->kind != RingKind::Product) throw PreconditionError(name() + " is not a product ring");
  if (comps.size() != d_->factors.size()) throw DimensionError("wrong number of components");
  return join(*d_, Word(comps.begin(), comps.end()));
}

std::vector<Ring> Ring::local_factors() const {
  if (d_->local) return {*this};
  return d_->locals;
}

Word Ring::to_local(Elem a) const {
  if (d_->local) return Word{a};
  if (d_->kind == RingKind::IntegersMod) {
    Word out(d_->prime_powers.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a % d_->prime_powers[i];
    return out;
  }
  Word out;
  const auto c = split(*d_, a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto part = d_->factors[i].to_local(c[i]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Elem Ring::from_local(std::span<const Elem> parts) const {
  if (d_->local) {
    if (parts.size() != 1) throw DimensionError("local ring expects one component");
    return parts[0];
  }
  if (d_->kind == RingKind::IntegersMod) {
    if (parts.size() != d_->prime_powers.size()) throw DimensionError("wrong CRT component count");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) v = (v + parts[i] * d_->crt_coeff[i]) % d_->m;
    return static_cast<Elem>(v);
  }
  Word comps(d_->factors.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::size_t cnt = d_->local_counts[i];
    if (offset + cnt > parts.size()) throw DimensionError("wrong local component count");
    comps[i] = d_->factors[i].from_local(parts.subspan(offset, cnt));
    offset += cnt;
  }
  if (offset != parts.size()) throw DimensionError("wrong local component count");
  return join(*d_, comps);
}

bool Ring::is_local() const { return d_->local; }

unsigned Ring::nilpotency() const {
  if (!d_->local) throw PreconditionError(name() + " is not local");
  return d_->nilpotency;
}

unsigned Ring::valuation(Elem a) const {
  if (!d_->local) throw PreconditionError(name() + " is not local");
  if (a == 0) return d_->nilpotency;
  if (d_->kind == RingKind::GaloisField) return 0;
  const std::uint32_t p = d_->primes[0];
  unsigned t = 0;
  while (a % p == 0) {
    a /= p;
    ++t;
  }
  return t;
}

Elem Ring::uniformizer_power(unsigned t) const {
  if (!d_->local) throw PreconditionError(name() + " is not local");
  if (t >= d_->nilpotency) return 0;
  if (d_->kind == RingKind::GaloisField) return t == 0 ? one() : 0;
  return static_cast<Elem>(mod_pow(d_->primes[0], t, d_->m));
}

std::size_t Ring::residue_size() const {
  if (!d_->local) throw PreconditionError(name() + " is not local");
  return d_->kind == RingKind::GaloisField ? d_->size : d_->primes[0];
}

Elem Ring::divide(Elem b, Elem a) const {
  const unsigned ta = valuation(a), tb = valuation(b);
  if (ta > tb) throw PreconditionError("divide: " + format(a) + " does not divide " + format(b));
  if (a == 0) return 0;
  if (d_->kind == RingKind::GaloisField) return mul(b, *inverse(a));
  const std::uint64_t pt = mod_pow(d_->primes[0], ta, std::uint64_t{1} << 40);
  const std::uint64_t unit = a / pt;
  const std::uint64_t rest = b / pt;
  const auto inv = *mod_inverse(static_cast<std::int64_t>(unit % d_->m), d_->m);
  return static_cast<Elem>(rest * inv % d_->m);
}

bool Ring::operator==(const Ring& other) const {
  return d_ == other.d_ || d_->key == other.d_->key;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(Ring ring, Elem value) : ring_(std::move(ring)), value_(value) {
  if (value_ >= ring_.size()) throw PreconditionError("element index out of range");
}

RingElement RingElement::operator+(const RingElement& o) const {
  require_same_ring(ring_, o.ring_, "addition");
  return {ring_, ring_.add(value_, o.value_)};
}

RingElement RingElement::operator-(const RingElement& o) const {
  require_same_ring(ring_, o.ring_, "subtraction");
  return {ring_, ring_.sub(value_, o.value_)};
}

RingElement RingElement::operator*(const RingElement& o) const {
  require_same_ring(ring_, o.ring_, "multiplication");
  return {ring_, ring_.mul(value_, o.value_)};
}

RingElement RingElement::operator-() const { return {ring_, ring_.neg(value_)}; }

bool RingElement::operator==(const RingElement& o) const {
  return ring_ == o.ring_ && value_ == o.value_;
}

std::optional<RingElement> RingElement::inverse() const {
  auto inv = ring_.inverse(value_);
  if (!inv) return std::nullopt;
  return RingElement(ring_, *inv);
}

void require_same_ring(const Ring& a, const Ring& b, std::string_view what) {
  if (a != b)
    throw RingMismatch(std::string(what) + ": operands over " + a.name() + " and " + b.name());
}

std::size_t hamming_weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

std::string format_word(const Ring& ring, std::span<const Elem> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += ring.format(v[i]);
  }
  return out + "]";
}

}  // namespace ringmpc
