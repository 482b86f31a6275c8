#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/matrix.hpp"

namespace ringmpc {

/// Exact code sizes; |R|^n overflows 64 bits quickly.
using Count = boost::multiprecision::cpp_int;

struct Freeness {
  bool free = false;
  /// Rank when free; otherwise the minimal number of generators.
  std::size_t rank = 0;
  /// A basis when free.
  std::optional<Matrix> basis;
};

enum class DualityClass { SelfDual, SelfOrthogonalOnly, Lcd, None };

std::string to_string(DualityClass c);

struct DualityReport {
  bool self_orthogonal = false;
  bool self_dual = false;
  bool lcd = false;
  DualityClass cls = DualityClass::None;
};

namespace detail {
struct CodeCache;
struct CodeStructure;
}  // namespace detail

/// An R-submodule of R^n given by generator rows, which may be dependent.
/// Immutable; structural data and the minimum distance are computed lazily
/// and shared between copies.
class LinearCode {
 public:
  explicit LinearCode(Matrix generators);

  static LinearCode zero(const Ring& ring, std::size_t n);
  static LinearCode full_space(const Ring& ring, std::size_t n);

  const Ring& ring() const { return generators_.ring(); }
  std::size_t length() const { return generators_.cols(); }
  const Matrix& generators() const { return generators_; }

  /// Exact |C| from the local Smith forms (no enumeration).
  Count cardinality() const;
  /// Free iff C has a basis; decided per local factor from the elementary
  /// divisors, independent of how the generators were chosen.
  Freeness freeness() const;
  /// Whether the stored generator rows themselves are independent.
  bool generators_independent() const;
  /// A generating set of minimal size; a basis when the code is free.
  Matrix minimal_generators() const;
  bool is_zero() const;

  /// All codewords, duplicates removed, in lexicographic order.
  std::vector<Word> codewords(const Limits& limits = {}) const;
  /// Minimum weight over nonzero codewords (brute force); throws
  /// UndefinedDistance for the zero code.
  std::size_t min_distance(const Limits& limits = {}) const;
  /// Nonzero codewords of weight min_distance(), lexicographic order.
  std::vector<Word> minimum_weight_words(const Limits& limits = {}) const;

  bool contains(std::span<const Elem> v) const;
  /// Euclidean dual {y : G y^T = 0}.
  LinearCode dual() const;
  /// G G^T = 0.
  bool is_self_orthogonal() const;
  DualityReport duality(const Limits& limits = {}) const;

 private:
  const detail::CodeStructure& structure() const;

  Matrix generators_;
  std::shared_ptr<detail::CodeCache> cache_;
};

/// Mutual containment of generator sets.
bool code_equals(const LinearCode& a, const LinearCode& b);

enum class KernelStrategy { Structured, Exhaustive };

/// {x in R^rows : x A = 0} as a code of length rows(A). The structured path
/// splits R into local factors and reads the kernel off a Smith form in each;
/// the exhaustive path scans R^rows under the kernel_ops budget.
LinearCode left_kernel(const Matrix& a, KernelStrategy strategy = KernelStrategy::Structured,
                       const Limits& limits = {});

/// Rows linearly independent; requires rows <= cols.
bool is_full_rank(const Matrix& a);

/// Deterministic hashing for words.
struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace ringmpc
