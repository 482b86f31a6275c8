#pragma once

#include <cstddef>
#include <cstdint>

namespace ringmpc {

/// Caps on brute-force work. Every exhaustive path checks these before it
/// starts and throws BudgetExceeded instead of running away.
struct Limits {
  /// Largest code (number of codewords) that may be enumerated.
  std::uint64_t codewords = 1'000'000;
  /// Element operations allowed for an exhaustive kernel search.
  std::uint64_t kernel_ops = 100'000'000;
  /// Largest ring on which maps are validated exhaustively.
  std::size_t max_ring_size = 4096;
  /// Largest square matrix handed to cofactor expansion.
  std::size_t max_cofactor_size = 8;
};

}  // namespace ringmpc
