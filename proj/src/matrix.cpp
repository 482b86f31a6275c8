#include "ringmpc/matrix.hpp"

#include <algorithm>

#include "ringmpc/errors.hpp"

namespace ringmpc {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionError("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(data_.size()));
  for (Elem e : data_)
    if (e >= ring_.size()) throw PreconditionError("matrix entry out of range for " + ring_.name());
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::diagonal(const Ring& ring, std::span<const Elem> diag) {
  Matrix m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, std::size_t cols, const std::vector<Word>& rows) {
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(ring, rows.size(), cols, std::move(data));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::vector<Word> Matrix::row_list() const {
  std::vector<Word> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix m = *this;
  for (auto& e : m.data_) e = ring_.mul(c, e);
  return m;
}

Matrix Matrix::stacked(const Matrix& other) const {
  require_same_ring(ring_, other.ring_, "matrix stacking");
  if (cols_ != other.cols_) throw DimensionError("stacking matrices with different column counts");
  std::vector<Elem> d = data_;
  d.insert(d.end(), other.data_.begin(), other.data_.end());
  return Matrix(ring_, rows_ + other.rows_, cols_, std::move(d));
}

Matrix Matrix::with_row(std::span<const Elem> r) const {
  if (r.size() != cols_) throw DimensionError("row length mismatch");
  std::vector<Elem> d = data_;
  d.insert(d.end(), r.begin(), r.end());
  return Matrix(ring_, rows_ + 1, cols_, std::move(d));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix product");
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
  const Ring& r = a.ring_;
  Matrix out(r, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = r.add(out(i, j), r.mul(x, b(k, j)));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += format_word(ring_, row(r));
    out += "\n";
  }
  return out;
}

Word vec_mat(std::span<const Elem> x, const Matrix& a) {
  if (x.size() != a.rows()) throw DimensionError("vector-matrix length mismatch");
  const Ring& r = a.ring();
  Word out(a.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = r.add(out[j], r.mul(x[i], a(i, j)));
  }
  return out;
}

Elem inner_product(const Ring& ring, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw DimensionError("inner product length mismatch");
  Elem s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = ring.add(s, ring.mul(x[i], y[i]));
  return s;
}

namespace {

// Laplace expansion along the first row of the submatrix picked by `cols`.
Elem cofactor_det(const Matrix& a, std::size_t row, std::vector<std::size_t>& cols) {
  const Ring& r = a.ring();
  if (cols.empty()) return r.one();
  if (cols.size() == 1) return a(row, cols[0]);
  Elem acc = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Elem x = a(row, cols[j]);
    if (x == 0) continue;
    const std::size_t c = cols[j];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    const Elem minor = cofactor_det(a, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), c);
    const Elem term = r.mul(x, minor);
    acc = (j % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
  }
  return acc;
}

void require_square(const Matrix& a, const Limits& limits) {
  if (!a.is_square())
    throw DimensionError("square matrix required, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  if (a.rows() > limits.max_cofactor_size)
    throw BudgetExceeded("cofactor expansion limited to size " +
                         std::to_string(limits.max_cofactor_size));
}

}  // namespace

Elem determinant(const Matrix& a, const Limits& limits) {
  require_square(a, limits);
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_det(a, 0, cols);
}

bool is_nonsingular(const Matrix& a, const Limits& limits) {
  return a.ring().is_unit(determinant(a, limits));
}

std::optional<Matrix> inverse(const Matrix& a, const Limits& limits) {
  const Elem det = determinant(a, limits);
  const Ring& r = a.ring();
  const auto det_inv = r.inverse(det);
  if (!det_inv) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix inv(r, n, n);
  if (n == 1) {
    inv(0, 0) = *det_inv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(A)_{ji} = (-1)^{i+j} det(A without row i, column j)
      Matrix minor(r, n - 1, n - 1);
      for (std::size_t rr = 0, mr = 0; rr < n; ++rr) {
        if (rr == i) continue;
        for (std::size_t cc = 0, mc = 0; cc < n; ++cc) {
          if (cc == j) continue;
          minor(mr, mc++) = a(rr, cc);
        }
        ++mr;
      }
      Elem cof = determinant(minor, limits);
      if ((i + j) % 2) cof = r.neg(cof);
      inv(j, i) = r.mul(cof, *det_inv);
    }
  return inv;
}

}  // namespace ringmpc
