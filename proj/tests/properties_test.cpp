#include <gtest/gtest.h>

#include "ringmpc/errors.hpp"
#include "ringmpc/properties.hpp"

using namespace ringmpc;

namespace {

void expect_clean(const properties::SuiteResult& r) {
  for (const auto& c : r.counterexamples) ADD_FAILURE() << r.name << ": " << c;
  EXPECT_EQ(r.passed + r.skipped, r.cases) << r.name;
}

}  // namespace

TEST(Properties, SmallRunsOfEverySuite) {
  for (const auto& name : properties::suite_names()) {
    const auto r = properties::run_suite(name, 0, 12);
    EXPECT_EQ(r.cases, 12u);
    expect_clean(r);
  }
}

TEST(Properties, Deterministic) {
  const auto a = properties::run_suite("bound", 42, 10);
  const auto b = properties::run_suite("bound", 42, 10);
  EXPECT_EQ(a.tallies, b.tallies);
  EXPECT_EQ(a.passed, b.passed);
}

TEST(Properties, ZeroCount) {
  const auto r = properties::run_suite("dual", 0, 0);
  EXPECT_EQ(r.cases, 0u);
  EXPECT_TRUE(r.ok());
}

TEST(Properties, UnknownSuite) {
  EXPECT_THROW(properties::run_suite("nope", 0, 1), PreconditionError);
}
