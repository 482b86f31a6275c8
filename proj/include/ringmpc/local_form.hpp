#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ringmpc/matrix.hpp"

namespace ringmpc {

/// Smith normal form over a local ring (Z/p^e Z or a Galois field):
/// left * a * right = diag(pi^t_0, pi^t_1, ...) with left and right
/// invertible and t_0 <= t_1 <= ... . A valuation equal to the ring's
/// nilpotency index marks a zero diagonal entry.
struct LocalSmithForm {
  Matrix left;
  Matrix right;
  std::vector<unsigned> valuations;  // one per diagonal position, min(rows, cols) entries
};

LocalSmithForm local_smith_form(const Matrix& a);

/// Entrywise image of `a` in local factor `index` of its ring.
Matrix local_component(const Matrix& a, std::size_t index, const Ring& local);

/// The word of R^n whose local component `index` is `v` and whose other
/// local components vanish.
Word embed_local(const Ring& ring, std::size_t index, std::size_t local_count,
                 std::span<const Elem> v);

/// Combines per-factor words (one per local factor, equal length) into a word
/// over the full ring.
Word combine_local(const Ring& ring, const std::vector<Word>& parts);

}  // namespace ringmpc
