#include "newtonfan/nondegeneracy.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nf;
using oracle::P;

namespace {

Poly poly(int n, std::vector<std::pair<std::vector<int>, Rat>> ts) { return Poly::from_terms(n, ts); }

std::set<std::vector<int>> leading_exponents(const std::vector<Poly>& G, int n) {
    std::set<std::vector<int>> r;
    for (const auto& g : G) r.insert(std::vector<int>(g.lead().m.e.begin(), g.lead().m.e.begin() + n));
    return r;
}

}  // namespace

TEST(Groebner, VariablesAndUnits) {
    auto G = groebner_basis({poly(2, {{{1, 0}, 1}}), poly(2, {{{0, 1}, 1}})});
    EXPECT_EQ(leading_exponents(G, 2), (std::set<std::vector<int>>{{1, 0}, {0, 1}}));
    auto H = groebner_basis({poly(2, {{{1, 0}, 2}}), poly(2, {{{0, 2}, 3}})});
    EXPECT_EQ(leading_exponents(H, 2), (std::set<std::vector<int>>{{1, 0}, {0, 2}}));
    for (const auto& h : H) EXPECT_EQ(h.lead().c, 1);
    EXPECT_FALSE(contains_one(H));
    EXPECT_TRUE(contains_one(groebner_basis({poly(2, {{{1, 0}, 1}, {{0, 0}, 1}}), poly(2, {{{1, 0}, 1}})})));
}

TEST(Groebner, CuspWithMixedTerm) {
    // (y^2 - x^3, xy): grevlex leading terms x^3, xy, y^3; quotient basis 1, x, x^2, y, y^2
    auto gens = std::vector<Poly>{poly(2, {{{0, 2}, 1}, {{3, 0}, -1}}), poly(2, {{{1, 1}, 1}})};
    auto G = groebner_basis(gens);
    EXPECT_EQ(leading_exponents(G, 2), (std::set<std::vector<int>>{{3, 0}, {1, 1}, {0, 3}}));
    EXPECT_EQ(quotient_dimension(gens, 2), 5);
    long budget = 1000;
    for (const auto& g : gens) EXPECT_TRUE(detail::reduce(g, G, budget).is_zero());
}

TEST(Groebner, BudgetIsEnforced) {
    auto f = poly(3, {{{5, 0, 0}, 1}, {{0, 6, 0}, 1}, {{0, 0, 5}, 1}, {{0, 3, 2}, 1}});
    std::vector<Poly> gens{f.derivative(0), f.derivative(1), f.derivative(2)};
    EXPECT_THROW(groebner_basis(gens, 3), BudgetExceeded);
    // the Milnor oracle reports an inconclusive result instead
    auto m = milnor_number(f, 8, 128, 3);
    EXPECT_FALSE(m.mu);
    EXPECT_EQ(m.note, "budget exceeded");
    GroebnerStats st;
    EXPECT_NO_THROW(groebner_basis(gens, 2000000, &st));
    EXPECT_GT(st.reductions, 3);
}

TEST(Milnor, SmallExamples) {
    EXPECT_EQ(milnor_number(poly(2, {{{2, 0}, 1}, {{0, 3}, 1}})).mu, 2);
    EXPECT_EQ(milnor_number(poly(2, {{{2, 0}, 1}, {{0, 2}, 1}})).mu, 1);
    EXPECT_EQ(milnor_number(poly(2, {{{3, 0}, 1}, {{0, 3}, 1}})).mu, 4);
    // x^2 y is not isolated
    EXPECT_FALSE(milnor_number(poly(2, {{{2, 1}, 1}}), 4, 16).mu);
}

TEST(Milnor, Brieskorn3D) {
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b)
            for (int c = 2; c <= 4; ++c)
                EXPECT_EQ(milnor_number(poly(3, {{{a, 0, 0}, 1}, {{0, b, 0}, 1}, {{0, 0, c}, 1}})).mu,
                          (a - 1) * (b - 1) * (c - 1));
}

TEST(Nondegeneracy, Examples) {
    auto r = nondegeneracy_check(poly(2, {{{2, 0}, 1}, {{0, 3}, 1}}));
    EXPECT_TRUE(r.nondegenerate());
    EXPECT_EQ(r.faces.size(), 3u);
    auto d = nondegeneracy_check(poly(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
    EXPECT_TRUE(d.any_degenerate());
    for (const auto& f : d.faces) {
        if (f.status == FaceStatus::degenerate) EXPECT_EQ(f.dim, 1);
    }
    auto bs = poly(3, {{{5, 0, 0}, 1}, {{0, 7, 1}, 1}, {{0, 0, 15}, 1}, {{0, 8, 0}, 1}});
    EXPECT_TRUE(nondegeneracy_check(bs).nondegenerate());
    auto bs_generic = poly(3, {{{5, 0, 0}, 1}, {{0, 7, 1}, 1}, {{0, 0, 15}, 1}, {{0, 8, 0}, 1}, {{1, 6, 0}, 1}});
    EXPECT_TRUE(nondegeneracy_check(bs_generic).nondegenerate());
}

TEST(Kouchnirenko, Examples) {
    auto r = kouchnirenko_crosscheck(poly(2, {{{3, 0}, 1}, {{0, 3}, 1}}));
    ASSERT_TRUE(r.mu);
    EXPECT_EQ(*r.mu, 4);
    EXPECT_EQ(r.nu.value, 4);
    EXPECT_TRUE(r.equality_holds);
    auto d = kouchnirenko_crosscheck(poly(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}, {{5, 0}, 1}, {{0, 5}, 1}}));
    ASSERT_TRUE(d.mu);
    EXPECT_FALSE(d.equality_expected);
    EXPECT_TRUE(d.inequality_holds);
    EXPECT_GT(Rat(*d.mu), d.nu.value);
}
