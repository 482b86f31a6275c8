#pragma once

// Brute-force reference computations. Nothing here touches the Smith-form
// machinery; every routine scans coefficient tuples or ambient vectors
// directly with ring arithmetic, so it can serve as an independent check
// on the structured paths.

#include <cstddef>
#include <optional>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/matrix.hpp"

namespace ringmpc::oracle {

/// { x G : x in R^rows(G) }, sorted, duplicates removed.
std::vector<Word> span_by_coefficients(const Matrix& g, const Limits& limits = {});

/// min over nonzero x G of the Hamming weight; nullopt for the zero span.
std::optional<std::size_t> min_distance_by_coefficients(const Matrix& g,
                                                        const Limits& limits = {});

/// Every y in R^cols(G) with G y^T = 0, sorted.
std::vector<Word> dual_by_enumeration(const Matrix& g, const Limits& limits = {});

/// Every x in R^rows(A) with x A = 0, sorted.
std::vector<Word> left_kernel_by_enumeration(const Matrix& a, const Limits& limits = {});

/// Search for b with a b = 1.
std::optional<Elem> inverse_by_enumeration(const Ring& ring, Elem a);

/// (c_1 ... c_s) A for columns c_i in R^n, computed as an n x s by s x l
/// matrix product and flattened column by column.
Word mpc_codeword(const std::vector<Word>& columns, const Matrix& a);

/// Every (c_1 ... c_s) A with c_i drawn from the given codeword lists.
std::vector<Word> mpc_by_enumeration(const std::vector<std::vector<Word>>& inputs, const Matrix& a,
                                     const Limits& limits = {});

}  // namespace ringmpc::oracle
