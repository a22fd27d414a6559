#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nf;
using oracle::P;

TEST(ParseRat, AcceptsIntegersAndFractions) {
    EXPECT_EQ(parse_rat("3"), Rat(3));
    EXPECT_EQ(parse_rat("-3/6"), Rat(-1, 2));
    EXPECT_EQ(parse_rat(" 4 / 8 "), Rat(1, 2));
    EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
}

TEST(ParseRat, RejectsMalformed) {
    for (const char* s : {"", "1/0", "1.5", "a", "1/", "/2", "1/-2", "--1"}) EXPECT_THROW(parse_rat(s), InputError) << s;
}

TEST(PrimitiveVector, Examples) {
    EXPECT_EQ(primitive_vector(P({2, 4, 6})), P({1, 2, 3}));
    EXPECT_EQ(primitive_vector(P({1, 1})), P({1, 1}));
    EXPECT_EQ(primitive_vector(P({0, 5, 0})), P({0, 1, 0}));
    EXPECT_THROW(primitive_vector(P({0, 0})), PreconditionError);
}

TEST(ClearDenominators, ReportsScaleFactor) {
    Rat f;
    Point v{Rat(1, 2), Rat(3, 4)};
    Point p = clear_denominators(v, &f);
    EXPECT_EQ(p, P({2, 3}));
    EXPECT_EQ(scale(v, f), p);
}

TEST(CoordSet, BasicOperations) {
    CoordSet a = CoordSet::of({0, 2});
    EXPECT_EQ(a.size(), 2);
    EXPECT_EQ(a.str(), "{1,3}");
    EXPECT_EQ(a.complement(4), CoordSet::of({1, 3}));
    EXPECT_TRUE(a.subset_of(CoordSet::full(3)));
    EXPECT_FALSE(CoordSet::full(3).subset_of(a));
    EXPECT_TRUE(CoordSet::of({1}) < a);
    EXPECT_EQ(support(P({0, 3, 1})), CoordSet::of({1, 2}));
}

TEST(Determinant, MatchesLeibnizOnRandomMatrices) {
    oracle::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(g.uniform(1, 5));
        Matrix m(n, Point(n));
        for (auto& row : m)
            for (auto& x : row) x = oracle::R(g.uniform(-5, 5), g.uniform(1, 3));
        EXPECT_EQ(det(m), oracle::leibniz_det(m));
    }
}

TEST(LinearAlgebra, NullspaceIsAnnihilated) {
    oracle::Gen g(5);
    for (int trial = 0; trial < 100; ++trial) {
        int r = static_cast<int>(g.uniform(1, 4)), c = static_cast<int>(g.uniform(1, 5));
        Matrix m(r, Point(c));
        for (auto& row : m)
            for (auto& x : row) x = g.uniform(-2, 2);
        Matrix N = nullspace(m, c);
        EXPECT_EQ(static_cast<int>(N.size()) + rank(m), c);
        for (const auto& v : N)
            for (const auto& row : m) EXPECT_EQ(dot(row, v), 0);
    }
}

TEST(LinearAlgebra, SolveCombination) {
    auto lam = solve_combination({P({1, 0, 1}), P({0, 1, 1})}, P({2, 3, 5}));
    ASSERT_TRUE(lam);
    EXPECT_EQ(*lam, P({2, 3}));
    EXPECT_FALSE(solve_combination({P({1, 0, 1}), P({0, 1, 1})}, P({1, 1, 0})));
}

TEST(LinearAlgebra, MaximalMinorsAndAffineDim) {
    // rows (1,2,1), (3,1,1): columns {1,2}, {1,3}, {2,3}
    auto m = maximal_minors({P({1, 2, 1}), P({3, 1, 1})});
    EXPECT_EQ(m, (std::vector<Rat>{-5, -2, 1}));
    EXPECT_EQ(affine_dim({P({0, 0}), P({1, 1}), P({2, 2})}), 1);
    EXPECT_EQ(affine_dim({}), -1);
    EXPECT_EQ(factorial(5), 120);
}
