#include <gtest/gtest.h>

#include "ringmpc/examples.hpp"

using namespace ringmpc;

TEST(Examples, AllGoldenChecksPass) {
  const auto checks = examples::verify_examples();
  EXPECT_GT(checks.size(), 40u);
  for (const auto& c : checks)
    if (c.golden) EXPECT_TRUE(c.passed) << c.id << ": " << c.description << "\n" << c.detail;
}

TEST(Examples, Z20Verdict) {
  const auto v = examples::z20_investigation();
  EXPECT_TRUE(v.consistent);
  EXPECT_EQ(v.primal_size, 20u);
  EXPECT_EQ(v.dual_size, 20u);
  EXPECT_TRUE(v.coincide);
  EXPECT_FALSE(v.contains_8_2);
}

TEST(Examples, Step2RejectsMovedBeta) {
  EXPECT_THROW(examples::gf4_step2("alpha", true), std::exception);
}
