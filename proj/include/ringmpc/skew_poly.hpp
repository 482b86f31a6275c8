#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringmpc/linear_code.hpp"
#include "ringmpc/matrix.hpp"
#include "ringmpc/matrix_product.hpp"
#include "ringmpc/ring_map.hpp"

namespace ringmpc {

class SkewContext;
using SkewContextPtr = std::shared_ptr<const SkewContext>;

/// The skew polynomial ring R[X; sigma, delta] with X a = sigma(a) X + delta(a).
class SkewContext {
 public:
  /// delta defaults to the zero sigma-derivation.
  static SkewContextPtr create(RingMap sigma, std::optional<RingMap> delta = std::nullopt,
                               std::string name = "");

  const Ring& ring() const { return sigma_.ring(); }
  const RingMap& sigma() const { return sigma_; }
  const RingMap& delta() const { return delta_; }
  const std::string& name() const { return name_; }
  bool sigma_invertible() const { return sigma_inv_.has_value(); }
  /// Throws PreconditionError when sigma is not an automorphism.
  const RingMap& sigma_inverse() const;
  bool delta_is_zero() const { return delta_.is_zero(); }

  /// sigma^k(a); negative k uses the inverse.
  Elem sigma_power(Elem a, long k) const;

 private:
  SkewContext(RingMap sigma, RingMap delta, std::optional<RingMap> inv, std::string name);

  RingMap sigma_;
  RingMap delta_;
  std::optional<RingMap> sigma_inv_;
  std::string name_;
};

/// Element of R[X; sigma, delta]; coefficients ascending, trailing zeros trimmed.
class SkewPoly {
 public:
  SkewPoly(SkewContextPtr ctx, Word coeffs);

  static SkewPoly zero(SkewContextPtr ctx);
  static SkewPoly constant(SkewContextPtr ctx, Elem c);
  static SkewPoly monomial(SkewContextPtr ctx, Elem c, std::size_t degree);
  static SkewPoly x(SkewContextPtr ctx);
  /// Human syntax such as "X^2 + alpha X + (2,2)". Products respect the
  /// commutation rule, so "X alpha" is sigma(alpha) X + delta(alpha).
  static SkewPoly parse(SkewContextPtr ctx, std::string_view text,
                        const std::function<std::optional<Elem>(std::string_view)>& names = {});

  const SkewContextPtr& context() const { return ctx_; }
  const Ring& ring() const { return ctx_->ring(); }
  const Word& coefficients() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& o) const;
  bool operator==(const SkewPoly& o) const;

  /// Descending human syntax, e.g. "X^4 + 1".
  std::string to_string() const;

 private:
  void check_same(const SkewPoly& o) const;

  SkewContextPtr ctx_;
  Word c_;
};

std::ostream& operator<<(std::ostream& os, const SkewPoly& p);

struct SkewDivision {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// p = q g + r with deg r < deg g. g must be monic.
SkewDivision right_divmod(const SkewPoly& p, const SkewPoly& g);
/// p = g q + r with deg r < deg g. g must be monic and sigma invertible.
SkewDivision left_divmod(const SkewPoly& p, const SkewPoly& g);

/// Companion matrix of monic f: ones on the superdiagonal block, last row
/// (-f_0, ..., -f_{n-1}).
Matrix companion_matrix(const SkewPoly& f);
/// T_f(t) = sigma(t) C_f + delta(t).
Word apply_tf(std::span<const Elem> t, const SkewPoly& f);
/// Coefficients of p mod (f)_l, padded to deg f.
Word phi_coordinates(const SkewPoly& p, const SkewPoly& f);

/// A principal (f, sigma, delta)-code generated by a monic right divisor g of f.
struct PrincipalSkewCode {
  SkewPoly g;
  SkewPoly f;
  std::size_t n;
  std::size_t k;
  Matrix generator;
  LinearCode realized;
  /// f = g h, available when sigma is an automorphism and g also divides on the left.
  std::optional<SkewPoly> h;
  std::optional<Matrix> parity;
};

/// k x n generator with rows g^(i) from the coefficient recurrence.
Matrix principal_generator(const SkewPoly& g, const SkewPoly& f);
PrincipalSkewCode principal_code(const SkewPoly& g, const SkewPoly& f);

/// (n-k) x n matrix from the iterates h^(c) of h under T_f; entry (r, c) is
/// h^(c)_{k+r}. Its rows generate the dual of the code of g.
Matrix dual_parity_matrix(const SkewPoly& g, const SkewPoly& h, const SkewPoly& f);

/// h*(X) = sum_i sigma^i(h_{k-i}) X^i.
SkewPoly skew_reciprocal(const SkewPoly& h);

struct SelfDualCriteria {
  Elem a = 0;
  /// cond1 needs g h = X^n - sigma^{-k}(a); absent when g does not divide.
  std::optional<SkewPoly> h;
  bool cond1 = false;
  /// Literal sums for l = 0..k.
  Word cond2_sums;
  std::vector<bool> cond2_per_l;
  bool direct = false;
};

/// f must be X^n - a with a a unit; a is read off f.
SelfDualCriteria constacyclic_selfdual_criteria(const SkewPoly& g, const SkewPoly& f,
                                                const Limits& limits = {});

/// [g_1 ... g_s] A from the principal generator matrices.
MatrixProductCode build_skew_mpc(const std::vector<PrincipalSkewCode>& codes, const Matrix& a);
/// [H_1 ... H_s] (A^{-1})^T from the parity matrices; A square, non-singular.
MatrixProductCode skew_mpc_dual(const std::vector<PrincipalSkewCode>& codes, const Matrix& a,
                                const Limits& limits = {});

}  // namespace ringmpc
