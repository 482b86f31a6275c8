#include "ringmpc/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "ringmpc/errors.hpp"

namespace ringmpc::oracle {

namespace {

void check_budget(long double work, std::uint64_t cap, const char* what) {
  if (work > static_cast<long double>(cap))
    throw BudgetExceeded(std::string(what) + " exceeds the enumeration budget");
}

long double power(std::size_t base, std::size_t exp) {
  return std::pow(static_cast<long double>(base), static_cast<long double>(exp));
}

// Advances a little-endian odometer over R^len; false once it wraps.
bool next_tuple(Word& x, std::size_t q) {
  for (auto& d : x) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

void sort_unique(std::vector<Word>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Word> span_by_coefficients(const Matrix& g, const Limits& limits) {
  const std::size_t q = g.ring().size();
  check_budget(power(q, g.rows()), limits.kernel_ops, "coefficient enumeration");
  std::vector<Word> out;
  Word x(g.rows(), 0);
  do {
    out.push_back(vec_mat(x, g));
  } while (next_tuple(x, q));
  sort_unique(out);
  return out;
}

std::optional<std::size_t> min_distance_by_coefficients(const Matrix& g, const Limits& limits) {
  const std::size_t q = g.ring().size();
  check_budget(power(q, g.rows()), limits.kernel_ops, "coefficient enumeration");
  std::optional<std::size_t> best;
  Word x(g.rows(), 0);
  while (next_tuple(x, q)) {
    const std::size_t wt = hamming_weight(vec_mat(x, g));
    if (wt > 0 && (!best || wt < *best)) best = wt;
  }
  return best;
}

std::vector<Word> dual_by_enumeration(const Matrix& g, const Limits& limits) {
  const Ring& R = g.ring();
  const std::size_t n = g.cols();
  check_budget(power(R.size(), n), limits.kernel_ops, "ambient enumeration");
  std::vector<Word> out;
  Word y(n, 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < g.rows() && ok; ++i) ok = inner_product(R, g.row(i), y) == 0;
    if (ok) out.push_back(y);
  } while (next_tuple(y, R.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> left_kernel_by_enumeration(const Matrix& a, const Limits& limits) {
  const Ring& R = a.ring();
  check_budget(power(R.size(), a.rows()), limits.kernel_ops, "ambient enumeration");
  std::vector<Word> out;
  Word x(a.rows(), 0);
  do {
    if (hamming_weight(vec_mat(x, a)) == 0) out.push_back(x);
  } while (next_tuple(x, R.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Elem> inverse_by_enumeration(const Ring& ring, Elem a) {
  for (Elem b = 0; b < ring.size(); ++b)
    if (ring.mul(a, b) == ring.one()) return b;
  return std::nullopt;
}

Word mpc_codeword(const std::vector<Word>& columns, const Matrix& a) {
  const Ring& R = a.ring();
  if (columns.size() != a.rows()) throw DimensionError("need one column per row of A");
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  // M = (c_1 ... c_s) as an n x s matrix.
  Matrix m(R, n, columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) m(k, i) = columns[i][k];
  const Matrix prod = m * a;
  Word out;
  out.reserve(n * a.cols());
  for (std::size_t t = 0; t < a.cols(); ++t)
    for (std::size_t k = 0; k < n; ++k) out.push_back(prod(k, t));
  return out;
}

std::vector<Word> mpc_by_enumeration(const std::vector<std::vector<Word>>& inputs, const Matrix& a,
                                     const Limits& limits) {
  long double total = 1;
  for (const auto& c : inputs) total *= static_cast<long double>(c.size());
  check_budget(total, limits.codewords * 16, "MPC enumeration");
  std::vector<Word> out;
  std::vector<std::size_t> idx(inputs.size(), 0);
  std::vector<Word> cols(inputs.size());
  for (;;) {
    for (std::size_t i = 0; i < inputs.size(); ++i) cols[i] = inputs[i][idx[i]];
    out.push_back(mpc_codeword(cols, a));
    std::size_t i = 0;
    while (i < inputs.size() && ++idx[i] == inputs[i].size()) idx[i++] = 0;
    if (i == inputs.size()) break;
  }
  sort_unique(out);
  return out;
}

}  // namespace ringmpc::oracle
