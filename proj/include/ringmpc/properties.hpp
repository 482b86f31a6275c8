#pragma once

// Seeded randomized property suites. Each case draws from its own generator
// seeded by (seed, suite, case index), so results do not depend on how many
// cases ran before.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringmpc/limits.hpp"

namespace ringmpc::properties {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  /// Cases that could not be evaluated within the budgets.
  std::size_t skipped = 0;
  /// Named counters, in a fixed order per suite.
  std::vector<std::pair<std::string, std::size_t>> tallies;
  /// One line per failing case, with the instance spelled out.
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// bound, dual, selfdual, division, kernel, codes.
const std::vector<std::string>& suite_names();

/// Default case count for a suite.
std::size_t default_count(std::string_view suite);

/// Throws PreconditionError for an unknown suite name.
SuiteResult run_suite(std::string_view suite, std::uint64_t seed, std::size_t count,
                      const Limits& limits = {});

}  // namespace ringmpc::properties
