#include "ringmpc/linear_code.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "ringmpc/errors.hpp"
#include "ringmpc/local_form.hpp"

namespace ringmpc {

std::string to_string(DualityClass c) {
  switch (c) {
    case DualityClass::SelfDual:
      return "self-dual";
    case DualityClass::SelfOrthogonalOnly:
      return "self-orthogonal";
    case DualityClass::Lcd:
      return "LCD";
    case DualityClass::None:
      return "none";
  }
  return "none";
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Elem e : w) {
    h ^= e + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace detail {

struct LocalPart {
  Ring ring;
  LocalSmithForm form;
  Matrix canonical;  // minimal generators in this factor
};

struct CodeStructure {
  std::vector<LocalPart> parts;
  Count cardinality;
  bool free;
  std::size_t min_generators;
  Matrix canonical;
};

struct CodeCache {
  std::once_flag structure_once;
  std::unique_ptr<CodeStructure> structure;
  std::mutex mu;
  std::optional<std::size_t> distance;
};

}  // namespace detail

namespace {

// Valuation of diagonal position i, extended by the nilpotency index (zero)
// past the end of the diagonal.
unsigned diag_val(const LocalSmithForm& f, std::size_t i, unsigned e) {
  return i < f.valuations.size() ? f.valuations[i] : e;
}

}  // namespace

LinearCode::LinearCode(Matrix generators)
    : generators_(std::move(generators)), cache_(std::make_shared<detail::CodeCache>()) {}

LinearCode LinearCode::zero(const Ring& ring, std::size_t n) {
  return LinearCode(Matrix(ring, 0, n));
}

LinearCode LinearCode::full_space(const Ring& ring, std::size_t n) {
  return LinearCode(Matrix::identity(ring, n));
}

const detail::CodeStructure& LinearCode::structure() const {
  std::call_once(cache_->structure_once, [this] {
    std::vector<detail::LocalPart> parts;
    Count cardinality = 1;
    bool free = true;
    const Ring& R = ring();
    const auto locals = R.local_factors();
    const std::size_t n = length();
    std::size_t max_mu = 0;
    std::size_t first_mu = 0;
    for (std::size_t j = 0; j < locals.size(); ++j) {
      const Ring& L = locals[j];
      const unsigned e = L.nilpotency();
      Matrix g = local_component(generators_, j, L);
      LocalSmithForm form = local_smith_form(g);
      const Matrix ug = form.left * g;
      std::vector<Word> rows;
      for (std::size_t i = 0; i < form.valuations.size(); ++i) {
        const unsigned t = form.valuations[i];
        if (t >= e) continue;
        if (t != 0) free = false;
        cardinality *= boost::multiprecision::pow(Count(L.residue_size()), e - t);
        rows.emplace_back(ug.row(i).begin(), ug.row(i).end());
      }
      if (j == 0) first_mu = rows.size();
      if (rows.size() != first_mu) free = false;
      max_mu = std::max(max_mu, rows.size());
      parts.push_back({L, std::move(form), Matrix::from_rows(L, n, rows)});
    }
    std::vector<Word> combined;
    for (std::size_t m = 0; m < max_mu; ++m) {
      std::vector<Word> per(locals.size(), Word(n, 0));
      for (std::size_t j = 0; j < locals.size(); ++j)
        if (m < parts[j].canonical.rows()) {
          const auto r = parts[j].canonical.row(m);
          per[j].assign(r.begin(), r.end());
        }
      combined.push_back(combine_local(R, per));
    }
    cache_->structure = std::make_unique<detail::CodeStructure>(detail::CodeStructure{
        std::move(parts), std::move(cardinality), free, max_mu,
        Matrix::from_rows(R, n, combined)});
  });
  return *cache_->structure;
}

Count LinearCode::cardinality() const { return structure().cardinality; }

Freeness LinearCode::freeness() const {
  const auto& s = structure();
  Freeness f;
  f.free = s.free;
  f.rank = s.min_generators;
  if (s.free) f.basis = s.canonical;
  return f;
}

bool LinearCode::generators_independent() const {
  return left_kernel(generators_).is_zero();
}

Matrix LinearCode::minimal_generators() const { return structure().canonical; }

bool LinearCode::is_zero() const { return generators_.is_zero(); }

std::vector<Word> LinearCode::codewords(const Limits& limits) const {
  const Count card = cardinality();
  if (card > Count(limits.codewords))
    throw BudgetExceeded("code has " + card.str() + " codewords, enumeration budget is " +
                         std::to_string(limits.codewords));
  const Ring& R = ring();
  const std::size_t n = length();
  const Matrix gens = minimal_generators();
  std::vector<Word> words{Word(n, 0)};
  std::unordered_set<Word, WordHash> seen{words.front()};
  words.reserve(static_cast<std::size_t>(card));
  for (std::size_t g = 0; g < gens.rows(); ++g) {
    const auto row = gens.row(g);
    const std::size_t current = words.size();
    for (Elem r = 1; r < R.size(); ++r) {
      Word scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = R.mul(r, row[i]);
      for (std::size_t w = 0; w < current; ++w) {
        Word cand(n);
        for (std::size_t i = 0; i < n; ++i) cand[i] = R.add(words[w][i], scaled[i]);
        if (seen.insert(cand).second) words.push_back(std::move(cand));
      }
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::size_t LinearCode::min_distance(const Limits& limits) const {
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->distance) return *cache_->distance;
  }
  if (cardinality() == 1) throw UndefinedDistance("minimum distance of the zero code is undefined");
  std::size_t best = length();
  for (const auto& w : codewords(limits)) {
    const std::size_t wt = hamming_weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  std::lock_guard lock(cache_->mu);
  cache_->distance = best;
  return best;
}

std::vector<Word> LinearCode::minimum_weight_words(const Limits& limits) const {
  const std::size_t d = min_distance(limits);
  std::vector<Word> out;
  for (auto& w : codewords(limits))
    if (hamming_weight(w) == d) out.push_back(std::move(w));
  return out;
}

bool LinearCode::contains(std::span<const Elem> v) const {
  if (v.size() != length())
    throw DimensionError("word of length " + std::to_string(v.size()) + " tested against code of length " +
                         std::to_string(length()));
  const auto& s = structure();
  const Ring& R = ring();
  const std::size_t n = length();
  std::vector<Word> locals(s.parts.size(), Word(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto parts = R.to_local(v[i]);
    for (std::size_t j = 0; j < parts.size(); ++j) locals[j][i] = parts[j];
  }
  for (std::size_t j = 0; j < s.parts.size(); ++j) {
    const auto& part = s.parts[j];
    const unsigned e = part.ring.nilpotency();
    const Word w = vec_mat(locals[j], part.form.right);
    for (std::size_t i = 0; i < n; ++i)
      if (part.ring.valuation(w[i]) < diag_val(part.form, i, e)) return false;
  }
  return true;
}

LinearCode LinearCode::dual() const { return left_kernel(generators_.transpose()); }

bool LinearCode::is_self_orthogonal() const {
  return (generators_ * generators_.transpose()).is_zero();
}

DualityReport LinearCode::duality(const Limits& limits) const {
  DualityReport r;
  const LinearCode d = dual();
  r.self_orthogonal = is_self_orthogonal();
  r.self_dual = r.self_orthogonal && cardinality() == d.cardinality();
  const bool enumerate_this = cardinality() <= d.cardinality();
  const LinearCode& small = enumerate_this ? *this : d;
  const LinearCode& large = enumerate_this ? d : *this;
  r.lcd = true;
  for (const auto& w : small.codewords(limits)) {
    if (hamming_weight(w) == 0) continue;
    if (large.contains(w)) {
      r.lcd = false;
      break;
    }
  }
  if (r.self_dual)
    r.cls = DualityClass::SelfDual;
  else if (r.self_orthogonal)
    r.cls = DualityClass::SelfOrthogonalOnly;
  else if (r.lcd)
    r.cls = DualityClass::Lcd;
  else
    r.cls = DualityClass::None;
  return r;
}

bool code_equals(const LinearCode& a, const LinearCode& b) {
  require_same_ring(a.ring(), b.ring(), "code comparison");
  if (a.length() != b.length()) throw DimensionError("codes of different lengths");
  if (a.cardinality() != b.cardinality()) return false;
  for (std::size_t i = 0; i < a.generators().rows(); ++i)
    if (!b.contains(a.generators().row(i))) return false;
  for (std::size_t i = 0; i < b.generators().rows(); ++i)
    if (!a.contains(b.generators().row(i))) return false;
  return true;
}

namespace {

LinearCode structured_kernel(const Matrix& a) {
  const Ring& R = a.ring();
  const auto locals = R.local_factors();
  const std::size_t r = a.rows();
  std::vector<std::vector<Word>> per_local(locals.size());
  std::size_t count = 0;
  for (std::size_t j = 0; j < locals.size(); ++j) {
    const Ring& L = locals[j];
    const unsigned e = L.nilpotency();
    const LocalSmithForm f = local_smith_form(local_component(a, j, L));
    for (std::size_t i = 0; i < r; ++i) {
      const unsigned t = diag_val(f, i, e);
      if (t == 0) continue;
      // y_i ranges over Ann(pi^t) = pi^{e-t} R
      const Elem ann = L.uniformizer_power(e - t);
      Word row(r);
      for (std::size_t c = 0; c < r; ++c) row[c] = L.mul(ann, f.left(i, c));
      per_local[j].push_back(std::move(row));
    }
    count = std::max(count, per_local[j].size());
  }
  std::vector<Word> rows;
  for (std::size_t m = 0; m < count; ++m) {
    std::vector<Word> parts(locals.size(), Word(r, 0));
    for (std::size_t j = 0; j < locals.size(); ++j)
      if (m < per_local[j].size()) parts[j] = per_local[j][m];
    Word w = combine_local(R, parts);
    if (hamming_weight(w) > 0) rows.push_back(std::move(w));
  }
  return LinearCode(Matrix::from_rows(R, r, rows));
}

LinearCode exhaustive_kernel(const Matrix& a, const Limits& limits) {
  const Ring& R = a.ring();
  const std::size_t r = a.rows();
  const std::size_t q = R.size();
  long double total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<long double>(q);
  if (total * static_cast<long double>(std::max<std::size_t>(1, r * a.cols())) >
      static_cast<long double>(limits.kernel_ops))
    throw BudgetExceeded("exhaustive kernel over " + R.name() + "^" + std::to_string(r) +
                         " exceeds the kernel budget");
  std::vector<Word> gens;
  std::unordered_set<Word, WordHash> span{Word(r, 0)};
  Word x(r, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < r && ++x[i] == q) x[i++] = 0;
    if (i == r) break;
    const Word y = vec_mat(x, a);
    if (hamming_weight(y) != 0 || span.contains(x)) continue;
    gens.push_back(x);
    std::vector<Word> current(span.begin(), span.end());
    for (const auto& w : current)
      for (Elem c = 1; c < q; ++c) {
        Word s(r);
        for (std::size_t k = 0; k < r; ++k) s[k] = R.add(w[k], R.mul(c, x[k]));
        span.insert(std::move(s));
      }
  }
  // Enumeration above runs in little-endian odometer order; report
  // generators sorted lexicographically for reproducible output.
  std::sort(gens.begin(), gens.end());
  return LinearCode(Matrix::from_rows(R, r, gens));
}

}  // namespace

LinearCode left_kernel(const Matrix& a, KernelStrategy strategy, const Limits& limits) {
  if (strategy == KernelStrategy::Exhaustive) return exhaustive_kernel(a, limits);
  return structured_kernel(a);
}

bool is_full_rank(const Matrix& a) {
  if (a.rows() > a.cols())
    throw DimensionError("full rank is defined for s <= l, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  return left_kernel(a).is_zero();
}

}  // namespace ringmpc
