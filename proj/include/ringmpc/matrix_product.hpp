#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/linear_code.hpp"
#include "ringmpc/matrix.hpp"

namespace ringmpc {

/// [C_1 ... C_s] A for input codes of common length n and an s x l matrix A.
///
/// Codewords are the n x l matrices (c_1 ... c_s) A. They are flattened
/// column by column: position t*n + k holds entry (k, t), so the word is the
/// concatenation of l blocks of length n and the generator rows take the
/// block form (a_i1 g | a_i2 g | ... | a_il g).
class MatrixProductCode {
 public:
  MatrixProductCode(std::vector<LinearCode> inputs, Matrix a);

  const std::vector<LinearCode>& inputs() const { return inputs_; }
  const Matrix& matrix() const { return a_; }
  const LinearCode& realized() const { return realized_; }
  std::size_t input_length() const { return n_; }
  std::size_t block_count() const { return a_.cols(); }

 private:
  std::vector<LinearCode> inputs_;
  Matrix a_;
  std::size_t n_;
  LinearCode realized_;
};

MatrixProductCode build_mpc(std::vector<LinearCode> inputs, Matrix a);

/// Block generator for explicit input generator matrices: rows
/// (a_i1 G_i | ... | a_il G_i), stacked over i.
Matrix block_generator(const std::vector<Matrix>& inputs, const Matrix& a);

/// (c_1 ... c_s) A flattened in block order.
Word mpc_word(const std::vector<Word>& columns, const Matrix& a);
/// The n x l matrix behind a flattened word.
Matrix codeword_matrix(const Ring& ring, std::span<const Elem> word, std::size_t n,
                       std::size_t l);

struct RowCodeFamily {
  Matrix a;
  /// codes[i] is spanned by rows 0..i of A.
  std::vector<LinearCode> codes;
  std::vector<std::size_t> distances;
};

RowCodeFamily row_codes(const Matrix& a, const Limits& limits = {});

/// min_i d_i D_i over the nonzero inputs. Requires A of full rank.
std::size_t distance_lower_bound(const std::vector<LinearCode>& inputs, const Matrix& a,
                                 const Limits& limits = {});

/// (u_1 v, u_2 v, ..., u_l v).
Word kron_mult(const Ring& ring, std::span<const Elem> u, std::span<const Elem> v);

enum class SharpnessStatus { Witness, NoWitness, Inapplicable };

std::string to_string(SharpnessStatus s);

struct SharpnessResult {
  SharpnessStatus status = SharpnessStatus::NoWitness;
  /// Per input: x_i in C_i of weight d_i and X_i in C_{L_i} of weight D_i.
  std::vector<Word> x;
  std::vector<Word> big_x;
  /// First index with no admissible pair (NoWitness), or a note.
  std::string detail;
};

/// Looks for minimum-weight x_i, X_i with X_i (x) x_i != 0 for every i,
/// provided C_s <= ... <= C_1. Search order is lexicographic.
SharpnessResult sharpness_witness(const std::vector<LinearCode>& inputs, const Matrix& a,
                                  const Limits& limits = {});

/// [C_1^perp ... C_s^perp] (A^{-1})^T. Inputs must be free and A non-singular.
MatrixProductCode mpc_dual(const std::vector<LinearCode>& inputs, const Matrix& a,
                           const Limits& limits = {});
/// The same formula without the freeness check (A must still be invertible).
MatrixProductCode dual_formula_unchecked(const std::vector<LinearCode>& inputs, const Matrix& a,
                                         const Limits& limits = {});

/// Diagonal of A A^T when that product is diagonal with unit entries.
std::optional<Word> is_quasi_orthogonal(const Matrix& a);

/// [C] Diag(r) Y == [C] Y.
bool diag_scale_equal(const std::vector<LinearCode>& inputs, const Matrix& y,
                      const Word& units);

struct CharacterizationReport {
  DualityReport mpc;
  std::vector<DualityReport> inputs;
  bool self_dual_holds = false;
  bool self_orthogonal_holds = false;
  bool lcd_holds = false;
  bool all_hold() const { return self_dual_holds && self_orthogonal_holds && lcd_holds; }
};

/// Compares the duality class of [C] A with those of the inputs; A must be
/// quasi-orthogonal.
CharacterizationReport characterization_check(const std::vector<LinearCode>& inputs,
                                              const Matrix& a, const Limits& limits = {});

}  // namespace ringmpc
