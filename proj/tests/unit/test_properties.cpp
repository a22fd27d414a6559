#include "property_suites.hpp"

#include <gtest/gtest.h>

TEST(Properties, GoodApexIffEqualNewtonNumbers) {
    auto r = suites::apex_equivalence(101, 120);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, MonotonicityAndDifferenceRegion) {
    auto r = suites::monotonicity(202, 80);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, PartialHomothety) {
    auto r = suites::homothety(303, 60);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, InteriorVertexLowersNewtonNumber) {
    auto r = suites::interior_drop(404, 60);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}
