#include "ringmpc/ring_map.hpp"

#include <algorithm>

#include "ringmpc/errors.hpp"

namespace ringmpc {

namespace {

void check_size(const Ring& ring) {
  if (ring.size() > Limits{}.max_ring_size)
    throw BudgetExceeded("ring " + ring.name() + " too large for exhaustive map validation");
}

std::vector<Elem> tabulate(const Ring& ring, auto&& f) {
  std::vector<Elem> t(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) t[a] = f(a);
  return t;
}

}  // namespace

RingMap::RingMap(Ring ring, MapRole role, std::vector<Elem> values, std::string description,
                 std::shared_ptr<const RingMap> sigma)
    : ring_(std::move(ring)),
      role_(role),
      table_(std::make_shared<const std::vector<Elem>>(std::move(values))),
      description_(std::move(description)),
      sigma_(std::move(sigma)) {
  check_size(ring_);
  if (table_->size() != ring_.size())
    throw PreconditionError("map table for " + ring_.name() + " must have " +
                            std::to_string(ring_.size()) + " entries");
  for (Elem v : *table_)
    if (v >= ring_.size()) throw PreconditionError("map table value out of range");
  validate();
}

void RingMap::validate() const {
  const Ring& r = ring_;
  const auto& t = *table_;
  const auto fail = [&](const std::string& law, Elem a, Elem b) {
    throw AxiomViolation(description_ + " violates " + law + " at (" + r.format(a) + ", " +
                             r.format(b) + ")",
                         r.format(a), r.format(b));
  };
  if (role_ == MapRole::Endomorphism) {
    if (t[r.one()] != r.one()) fail("sigma(1) = 1", r.one(), r.one());
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b) {
        if (t[r.add(a, b)] != r.add(t[a], t[b])) fail("additivity", a, b);
        if (t[r.mul(a, b)] != r.mul(t[a], t[b])) fail("multiplicativity", a, b);
      }
    return;
  }
  const RingMap& s = *sigma_;
  if (!(s.ring_ == r)) throw RingMismatch("derivation and endomorphism over different rings");
  if (t[r.one()] != r.zero()) fail("delta(1) = 0", r.one(), r.one());
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      if (t[r.add(a, b)] != r.add(t[a], t[b])) fail("additivity", a, b);
      if (t[r.mul(a, b)] != r.add(r.mul(s(a), t[b]), r.mul(t[a], b))) fail("the Leibniz rule", a, b);
    }
}

RingMap RingMap::identity(const Ring& ring) {
  check_size(ring);
  return RingMap(ring, MapRole::Endomorphism, ring.elements(), "identity", nullptr);
}

RingMap RingMap::frobenius(const Ring& ring, unsigned power) {
  if (ring.kind() != RingKind::GaloisField)
    throw PreconditionError("Frobenius map requires a Galois field, got " + ring.name());
  check_size(ring);
  std::uint64_t e = 1;
  for (unsigned i = 0; i < power % ring.degree(); ++i) e *= ring.prime();
  return RingMap(ring, MapRole::Endomorphism,
                 tabulate(ring, [&](Elem a) { return ring.pow(a, e); }),
                 "frobenius^" + std::to_string(power), nullptr);
}

RingMap RingMap::permute_components(const Ring& ring, std::vector<std::size_t> perm) {
  if (ring.kind() != RingKind::Product)
    throw PreconditionError("component permutation requires a product ring, got " + ring.name());
  const auto& f = ring.factors();
  if (perm.size() != f.size()) throw PreconditionError("permutation length must equal factor count");
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw PreconditionError("not a permutation");
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (f[i] != f[perm[i]]) throw PreconditionError("permutation mixes different factor rings");
  check_size(ring);
  std::string desc = "permute(";
  for (std::size_t i = 0; i < perm.size(); ++i) desc += (i ? "," : "") + std::to_string(perm[i]);
  desc += ")";
  return RingMap(ring, MapRole::Endomorphism, tabulate(ring, [&](Elem a) {
                   const auto c = ring.components(a);
                   Word out(c.size());
                   for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[perm[i]];
                   return ring.from_components(out);
                 }),
                 desc, nullptr);
}

RingMap RingMap::endomorphism_from_table(const Ring& ring, std::vector<Elem> values,
                                         std::string description) {
  return RingMap(ring, MapRole::Endomorphism, std::move(values), std::move(description), nullptr);
}

RingMap RingMap::zero_derivation(const RingMap& sigma) {
  if (sigma.role() != MapRole::Endomorphism)
    throw PreconditionError("a derivation must be attached to an endomorphism");
  return RingMap(sigma.ring(), MapRole::Derivation, std::vector<Elem>(sigma.ring().size(), 0),
                 "zero", std::make_shared<const RingMap>(sigma));
}

RingMap RingMap::inner_derivation(const RingMap& sigma, Elem beta) {
  if (sigma.role() != MapRole::Endomorphism)
    throw PreconditionError("a derivation must be attached to an endomorphism");
  const Ring& r = sigma.ring();
  return RingMap(r, MapRole::Derivation,
                 tabulate(r, [&](Elem a) { return r.mul(beta, r.sub(sigma(a), a)); }),
                 "inner(" + r.format(beta) + ")", std::make_shared<const RingMap>(sigma));
}

RingMap RingMap::derivation_from_table(const RingMap& sigma, std::vector<Elem> values,
                                       std::string description) {
  if (sigma.role() != MapRole::Endomorphism)
    throw PreconditionError("a derivation must be attached to an endomorphism");
  return RingMap(sigma.ring(), MapRole::Derivation, std::move(values), std::move(description),
                 std::make_shared<const RingMap>(sigma));
}

Word RingMap::apply(std::span<const Elem> v) const {
  Word out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (*table_)[v[i]];
  return out;
}

const RingMap& RingMap::sigma() const {
  if (role_ != MapRole::Derivation) throw PreconditionError("not a derivation");
  return *sigma_;
}

bool RingMap::is_identity() const {
  for (Elem a = 0; a < table_->size(); ++a)
    if ((*table_)[a] != a) return false;
  return true;
}

bool RingMap::is_zero() const {
  return std::all_of(table_->begin(), table_->end(), [](Elem v) { return v == 0; });
}

bool RingMap::is_bijective() const {
  std::vector<bool> seen(table_->size(), false);
  for (Elem v : *table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

RingMap RingMap::compose(const RingMap& other) const {
  if (role_ != MapRole::Endomorphism || other.role_ != MapRole::Endomorphism)
    throw PreconditionError("composition is defined for endomorphisms");
  require_same_ring(ring_, other.ring_, "map composition");
  std::vector<Elem> t(table_->size());
  for (Elem a = 0; a < t.size(); ++a) t[a] = (*table_)[other(a)];
  return RingMap(ring_, MapRole::Endomorphism, std::move(t),
                 description_ + " o " + other.description_, nullptr);
}

RingMap RingMap::power(unsigned k) const {
  if (role_ != MapRole::Endomorphism) throw PreconditionError("power of a non-endomorphism");
  std::vector<Elem> t = ring_.elements();
  for (unsigned i = 0; i < k; ++i)
    for (auto& v : t) v = (*table_)[v];
  return RingMap(ring_, MapRole::Endomorphism, std::move(t),
                 description_ + "^" + std::to_string(k), nullptr);
}

std::optional<RingMap> RingMap::inverse() const {
  if (role_ != MapRole::Endomorphism || !is_bijective()) return std::nullopt;
  std::vector<Elem> t(table_->size());
  for (Elem a = 0; a < t.size(); ++a) t[(*table_)[a]] = a;
  return RingMap(ring_, MapRole::Endomorphism, std::move(t), description_ + "^-1", nullptr);
}

bool RingMap::operator==(const RingMap& o) const {
  return role_ == o.role_ && ring_ == o.ring_ && *table_ == *o.table_;
}

}  // namespace ringmpc
