#include "ringmpc/local_form.hpp"

#include <algorithm>

#include "ringmpc/errors.hpp"

namespace ringmpc {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row_dst -= f * row_src
void row_axpy(Matrix& m, std::size_t dst, std::size_t src, Elem f) {
  const Ring& R = m.ring();
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = R.sub(m(dst, c), R.mul(f, m(src, c)));
}

void col_axpy(Matrix& m, std::size_t dst, std::size_t src, Elem f) {
  const Ring& R = m.ring();
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = R.sub(m(r, dst), R.mul(f, m(r, src)));
}

void scale_row(Matrix& m, std::size_t r, Elem f) {
  const Ring& R = m.ring();
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = R.mul(f, m(r, c));
}

}  // namespace

LocalSmithForm local_smith_form(const Matrix& input) {
  const Ring& R = input.ring();
  if (!R.is_local()) throw PreconditionError("local_smith_form needs a local ring, got " + R.name());
  const unsigned e = R.nilpotency();
  Matrix a = input;
  Matrix u = Matrix::identity(R, a.rows());
  Matrix v = Matrix::identity(R, a.cols());
  const std::size_t diag = std::min(a.rows(), a.cols());
  std::vector<unsigned> vals(diag, e);

  for (std::size_t k = 0; k < diag; ++k) {
    unsigned best = e;
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < a.rows() && best > 0; ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        const unsigned t = R.valuation(a(i, j));
        if (t < best) {
          best = t;
          bi = i;
          bj = j;
          if (t == 0) break;
        }
      }
    if (best == e) break;
    swap_rows(a, k, bi);
    swap_rows(u, k, bi);
    swap_cols(a, k, bj);
    swap_cols(v, k, bj);

    const Elem pivot = R.uniformizer_power(best);
    const Elem unit = R.divide(pivot, a(k, k));
    scale_row(a, k, unit);
    scale_row(u, k, unit);

    for (std::size_t i = k + 1; i < a.rows(); ++i) {
      if (a(i, k) == 0) continue;
      const Elem f = R.divide(a(i, k), pivot);
      row_axpy(a, i, k, f);
      row_axpy(u, i, k, f);
    }
    for (std::size_t j = k + 1; j < a.cols(); ++j) {
      if (a(k, j) == 0) continue;
      const Elem f = R.divide(a(k, j), pivot);
      col_axpy(a, j, k, f);
      col_axpy(v, j, k, f);
    }
    vals[k] = best;
  }
  return LocalSmithForm{std::move(u), std::move(v), std::move(vals)};
}

Matrix local_component(const Matrix& a, std::size_t index, const Ring& local) {
  std::vector<Elem> d(a.entries().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.ring().to_local(a.entries()[i])[index];
  return Matrix(local, a.rows(), a.cols(), std::move(d));
}

Word embed_local(const Ring& ring, std::size_t index, std::size_t local_count,
                 std::span<const Elem> v) {
  Word out(v.size());
  Word parts(local_count, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    parts[index] = v[i];
    out[i] = ring.from_local(parts);
  }
  return out;
}

Word combine_local(const Ring& ring, const std::vector<Word>& parts) {
  const std::size_t n = parts.empty() ? 0 : parts[0].size();
  Word out(n);
  Word tmp(parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) tmp[j] = parts[j][i];
    out[i] = ring.from_local(tmp);
  }
  return out;
}

}  // namespace ringmpc
