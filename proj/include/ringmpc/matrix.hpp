#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/ring.hpp"

namespace ringmpc {

/// Dense row-major matrix over a finite commutative ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix diagonal(const Ring& ring, std::span<const Elem> diag);
  static Matrix from_rows(const Ring& ring, std::size_t cols, const std::vector<Word>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Word> row_list() const;
  const std::vector<Elem>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix scaled(Elem c) const;
  /// Rows of this followed by rows of other.
  Matrix stacked(const Matrix& other) const;
  Matrix with_row(std::span<const Elem> r) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& o) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Row vector times matrix.
Word vec_mat(std::span<const Elem> x, const Matrix& a);
/// Sum of x_i y_i.
Elem inner_product(const Ring& ring, std::span<const Elem> x, std::span<const Elem> y);

/// Determinant by cofactor expansion (division-free, valid over any
/// commutative ring). Throws DimensionError for non-square input.
Elem determinant(const Matrix& a, const Limits& limits = {});
/// det(A) is a unit.
bool is_nonsingular(const Matrix& a, const Limits& limits = {});
/// adj(A) det(A)^{-1}, or nothing when det(A) is not a unit.
std::optional<Matrix> inverse(const Matrix& a, const Limits& limits = {});

}  // namespace ringmpc
