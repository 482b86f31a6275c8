#include "ringmpc/matrix_product.hpp"

#include <algorithm>

#include "ringmpc/errors.hpp"

namespace ringmpc {

namespace {

void check_inputs(const std::vector<LinearCode>& inputs, const Matrix& a) {
  if (inputs.size() != a.rows())
    throw DimensionError("matrix has " + std::to_string(a.rows()) + " rows but " +
                         std::to_string(inputs.size()) + " input codes were given");
  if (a.rows() > a.cols()) throw DimensionError("matrix must have s <= l");
  if (inputs.empty()) throw DimensionError("at least one input code is required");
  for (const auto& c : inputs) {
    require_same_ring(c.ring(), a.ring(), "matrix-product input");
    if (c.length() != inputs[0].length()) throw DimensionError("input codes differ in length");
  }
}

std::vector<Matrix> generator_list(const std::vector<LinearCode>& inputs) {
  std::vector<Matrix> out;
  out.reserve(inputs.size());
  for (const auto& c : inputs) out.push_back(c.generators());
  return out;
}

Matrix inverse_transpose(const Matrix& a, const Limits& limits) {
  if (!a.is_square()) throw PreconditionError("dual formula needs a square matrix");
  auto inv = inverse(a, limits);
  if (!inv) throw PreconditionError("matrix is singular (determinant is not a unit)");
  return inv->transpose();
}

}  // namespace

Matrix block_generator(const std::vector<Matrix>& inputs, const Matrix& a) {
  if (inputs.size() != a.rows()) throw DimensionError("one generator matrix per row of A");
  const Ring& R = a.ring();
  const std::size_t n = inputs.empty() ? 0 : inputs[0].cols();
  const std::size_t l = a.cols();
  std::size_t total = 0;
  for (const auto& g : inputs) {
    require_same_ring(g.ring(), R, "block generator");
    if (g.cols() != n) throw DimensionError("generator matrices differ in length");
    total += g.rows();
  }
  Matrix out(R, total, n * l);
  std::size_t r = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Matrix& g = inputs[i];
    for (std::size_t j = 0; j < g.rows(); ++j, ++r)
      for (std::size_t t = 0; t < l; ++t)
        for (std::size_t k = 0; k < n; ++k) out(r, t * n + k) = R.mul(a(i, t), g(j, k));
  }
  return out;
}

MatrixProductCode::MatrixProductCode(std::vector<LinearCode> inputs, Matrix a)
    : inputs_((check_inputs(inputs, a), std::move(inputs))),
      a_(std::move(a)),
      n_(inputs_[0].length()),
      realized_(block_generator(generator_list(inputs_), a_)) {}

MatrixProductCode build_mpc(std::vector<LinearCode> inputs, Matrix a) {
  return MatrixProductCode(std::move(inputs), std::move(a));
}

Word mpc_word(const std::vector<Word>& columns, const Matrix& a) {
  if (columns.size() != a.rows()) throw DimensionError("one column per row of A");
  const Ring& R = a.ring();
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  Word out(n * a.cols(), 0);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != n) throw DimensionError("columns differ in length");
    for (std::size_t t = 0; t < a.cols(); ++t)
      for (std::size_t k = 0; k < n; ++k)
        out[t * n + k] = R.add(out[t * n + k], R.mul(columns[i][k], a(i, t)));
  }
  return out;
}

Matrix codeword_matrix(const Ring& ring, std::span<const Elem> word, std::size_t n,
                       std::size_t l) {
  if (word.size() != n * l) throw DimensionError("word length is not n*l");
  Matrix m(ring, n, l);
  for (std::size_t t = 0; t < l; ++t)
    for (std::size_t k = 0; k < n; ++k) m(k, t) = word[t * n + k];
  return m;
}

RowCodeFamily row_codes(const Matrix& a, const Limits& limits) {
  RowCodeFamily fam{a, {}, {}};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Word> rows;
    for (std::size_t j = 0; j <= i; ++j) rows.emplace_back(a.row(j).begin(), a.row(j).end());
    LinearCode c(Matrix::from_rows(a.ring(), a.cols(), rows));
    // A zero prefix has no distance; report 0 and let callers decide.
    fam.distances.push_back(c.is_zero() ? 0 : c.min_distance(limits));
    fam.codes.push_back(std::move(c));
  }
  return fam;
}

std::size_t distance_lower_bound(const std::vector<LinearCode>& inputs, const Matrix& a,
                                 const Limits& limits) {
  check_inputs(inputs, a);
  if (!is_full_rank(a)) throw PreconditionError("distance bound requires A of full rank");
  const RowCodeFamily fam = row_codes(a, limits);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) continue;
    const std::size_t v = inputs[i].min_distance(limits) * fam.distances[i];
    if (!best || v < *best) best = v;
  }
  if (!best) throw UndefinedDistance("all input codes are zero");
  return *best;
}

Word kron_mult(const Ring& ring, std::span<const Elem> u, std::span<const Elem> v) {
  Word out;
  out.reserve(u.size() * v.size());
  for (Elem x : u)
    for (Elem y : v) out.push_back(ring.mul(x, y));
  return out;
}

std::string to_string(SharpnessStatus s) {
  switch (s) {
    case SharpnessStatus::Witness: return "witness";
    case SharpnessStatus::NoWitness: return "absent";
    case SharpnessStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

SharpnessResult sharpness_witness(const std::vector<LinearCode>& inputs, const Matrix& a,
                                  const Limits& limits) {
  check_inputs(inputs, a);
  if (!is_full_rank(a)) throw PreconditionError("sharpness condition requires A of full rank");
  SharpnessResult res;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) {
      res.status = SharpnessStatus::Inapplicable;
      res.detail = "input " + std::to_string(i + 1) + " is the zero code";
      return res;
    }
  }
  for (std::size_t i = 0; i + 1 < inputs.size(); ++i) {
    const Matrix& g = inputs[i + 1].generators();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (!inputs[i].contains(g.row(r))) {
        res.status = SharpnessStatus::Inapplicable;
        res.detail = "C" + std::to_string(i + 2) + " is not contained in C" + std::to_string(i + 1);
        return res;
      }
    }
  }
  const RowCodeFamily fam = row_codes(a, limits);
  const Ring& R = a.ring();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto xs = inputs[i].minimum_weight_words(limits);
    const auto big = fam.codes[i].minimum_weight_words(limits);
    bool found = false;
    for (const auto& x : xs) {
      for (const auto& X : big) {
        if (hamming_weight(kron_mult(R, X, x)) != 0) {
          res.x.push_back(x);
          res.big_x.push_back(X);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      res.status = SharpnessStatus::NoWitness;
      res.x.clear();
      res.big_x.clear();
      res.detail = "every product X_" + std::to_string(i + 1) + " x_" + std::to_string(i + 1) +
                   " vanishes";
      return res;
    }
  }
  res.status = SharpnessStatus::Witness;
  return res;
}

MatrixProductCode dual_formula_unchecked(const std::vector<LinearCode>& inputs, const Matrix& a,
                                         const Limits& limits) {
  check_inputs(inputs, a);
  Matrix b = inverse_transpose(a, limits);
  std::vector<LinearCode> duals;
  duals.reserve(inputs.size());
  for (const auto& c : inputs) duals.emplace_back(c.dual().minimal_generators());
  return MatrixProductCode(std::move(duals), std::move(b));
}

MatrixProductCode mpc_dual(const std::vector<LinearCode>& inputs, const Matrix& a,
                           const Limits& limits) {
  check_inputs(inputs, a);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!inputs[i].freeness().free)
      throw PreconditionError("input code " + std::to_string(i + 1) +
                              " is not free; the dual formula needs free inputs");
  return dual_formula_unchecked(inputs, a, limits);
}

std::optional<Word> is_quasi_orthogonal(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("quasi-orthogonality needs a square matrix");
  const Ring& R = a.ring();
  const Matrix p = a * a.transpose();
  Word diag;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (i == j) continue;
      if (p(i, j) != 0) return std::nullopt;
    }
    if (!R.is_unit(p(i, i))) return std::nullopt;
    diag.push_back(p(i, i));
  }
  return diag;
}

bool diag_scale_equal(const std::vector<LinearCode>& inputs, const Matrix& y, const Word& units) {
  const Ring& R = y.ring();
  if (units.size() != y.rows()) throw DimensionError("one scale per row of Y");
  for (Elem u : units)
    if (!R.is_unit(u)) throw PreconditionError("scale " + R.format(u) + " is not a unit");
  Matrix x = Matrix::diagonal(R, units) * y;
  return code_equals(build_mpc(inputs, std::move(x)).realized(), build_mpc(inputs, y).realized());
}

CharacterizationReport characterization_check(const std::vector<LinearCode>& inputs,
                                              const Matrix& a, const Limits& limits) {
  check_inputs(inputs, a);
  if (!is_quasi_orthogonal(a)) throw PreconditionError("matrix is not quasi-orthogonal");
  CharacterizationReport rep;
  rep.mpc = build_mpc(inputs, a).realized().duality(limits);
  bool sd = true, so = true, lcd = true;
  for (const auto& c : inputs) {
    rep.inputs.push_back(c.duality(limits));
    sd = sd && rep.inputs.back().self_dual;
    so = so && rep.inputs.back().self_orthogonal;
    lcd = lcd && rep.inputs.back().lcd;
  }
  rep.self_dual_holds = rep.mpc.self_dual == sd;
  rep.self_orthogonal_holds = rep.mpc.self_orthogonal == so;
  rep.lcd_holds = rep.mpc.lcd == lcd;
  return rep;
}

}  // namespace ringmpc
