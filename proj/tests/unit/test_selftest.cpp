#include <gtest/gtest.h>

#include "liekit/selftest.hpp"

using namespace liekit;

TEST(Selftest, SuitesListed)
{
    auto names = selftest_suites();
    EXPECT_EQ(names.front(), "rootsys");
    EXPECT_EQ(names.size(), 8u);
    EXPECT_THROW(run_suite("nope", 1), std::invalid_argument);
}

TEST(Selftest, SeedsAreReproducible)
{
    auto a = run_suite("weyl", 5), b = run_suite("weyl", 5);
    EXPECT_TRUE(a.passed) << a.detail;
    EXPECT_EQ(a.cases, b.cases);
}

TEST(Selftest, RandomAlgebrasMatchTheirRecipes)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto r = random_lie_algebra(rng);
        EXPECT_LE(r.g.dim(), 8u);
        EXPECT_EQ(is_solvable(r.g), r.solvable) << r.recipe;
        EXPECT_EQ(is_nilpotent(r.g), r.nilpotent) << r.recipe;
        if (r.nilpotent)
            EXPECT_TRUE(r.solvable);
    }
}

TEST(Selftest, EverySuitePasses)
{
    for (const auto& r : run_selftest(20240601))
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
