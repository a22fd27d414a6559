#include "newtonfan/resolution.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nf;
using oracle::P;

namespace {

using Terms = std::vector<std::pair<std::vector<int>, Rat>>;

DeformationFamily family(int n, int m, Terms ts) { return make_family(n, m, Poly::from_terms(n + m, ts)); }

DeformationFamily bs_family() {
    return family(3, 1, {{{5, 0, 0, 0}, 1}, {{0, 7, 1, 0}, 1}, {{0, 0, 15, 0}, 1}, {{0, 8, 0, 0}, 1}, {{1, 6, 0, 1}, 1}});
}

}  // namespace

TEST(Family, Supports) {
    auto D = bs_family();
    EXPECT_EQ(generic_support(D).points, augment(base_support(D), {P({1, 6, 0})}).points);
    auto Z = family(2, 1, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{1, 1, 1}, 0}});
    EXPECT_EQ(generic_support(Z).points, base_support(Z).points);
    EXPECT_THROW(family(2, 1, {{{2, 0, 0}, 1}, {{0, 0, 1}, 1}}), InputError);
    EXPECT_THROW(family(2, 1, {{{1, 0, 1}, 1}}), InputError);
}

TEST(Family, RelativeJacobian) {
    auto D = family(1, 1, {{{2, 0}, 1}, {{1, 1}, 1}});
    EXPECT_EQ(relative_jacobian(D)[0], Poly::from_terms(2, {{{1, 0}, 2}, {{0, 1}, 1}}));
    EXPECT_EQ(relative_jacobian(bs_family())[0], Poly::from_terms(4, {{{4, 0, 0, 0}, 5}, {{0, 6, 0, 1}, 1}}));
    EXPECT_EQ(parameter_partials(bs_family())[0], Poly::from_terms(4, {{{1, 6, 0, 0}, 1}}));
}

TEST(ChartPullback, SquareCone) {
    auto D = family(2, 1, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}});
    auto T = chart_pullback(D, Chart{{P({1, 1}), P({0, 1})}});
    EXPECT_EQ(T.m, (std::vector<long>{2, 0}));
    EXPECT_EQ(T.Fbar, Poly::from_terms(3, {{{0, 0, 0}, 1}, {{0, 2, 0}, 1}}));
    auto Id = chart_pullback(D, Chart{{P({1, 0}), P({0, 1})}});
    EXPECT_EQ(Id.m, (std::vector<long>{0, 0}));
    EXPECT_EQ(Id.Fbar, D.F);
    EXPECT_THROW(chart_pullback(D, Chart{{P({1, 2}), P({2, 1})}}), PreconditionError);
}

TEST(Resolution, BrianconSpeder) {
    auto D = bs_family();
    auto R = simultaneous_resolution(D);
    auto Gp = gamma_plus(generic_support(D));
    EXPECT_EQ(R.charts.size(), R.fan.cones.size());
    EXPECT_EQ(R.count(ChartStatus::unchecked), 0);
    EXPECT_EQ(R.count(ChartStatus::failed), 0);
    EXPECT_TRUE(check_admissible(R.fan, Gp).admissible);
    int verd_charts = 0;
    for (const auto& c : R.charts) {
        EXPECT_EQ(abs(det(c.chart.gens)), 1);
        for (std::size_t k = 0; k < c.chart.gens.size(); ++k)
            EXPECT_EQ(Rat(c.transform.m[k]), Gp.support_value(c.chart.gens[k]));
        if (c.verd_vertex) {
            ++verd_charts;
            EXPECT_EQ(*c.verd_vertex, P({1, 6, 0}));
            EXPECT_EQ(c.apex_axis, 2);
            EXPECT_TRUE(c.normal_form);
            EXPECT_EQ(c.status, ChartStatus::smooth_verified);
            EXPECT_EQ(c.chart.gens.back(), P({0, 0, 1}));
            // c0(s) = s, and the y3 coefficient is a unit
            Poly c0 = y_coefficient(c.transform.Fbar, 3, 1, {0, 0, 0});
            EXPECT_EQ(c0, Poly::from_terms(1, {{{1}, 1}}));
            Poly c1 = y_coefficient(c.transform.Fbar, 3, 1, {0, 0, 1});
            EXPECT_NE(c1.constant_term(), 0);
        } else {
            EXPECT_EQ(c.status, ChartStatus::unit);
        }
    }
    EXPECT_GE(verd_charts, 1);
}

TEST(Resolution, TrivialDeformation) {
    auto R = simultaneous_resolution(family(2, 1, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}}));
    EXPECT_EQ(R.fan.cones.size(), 2u);
    for (const auto& c : R.charts) EXPECT_EQ(c.status, ChartStatus::unit);
    auto R3 = simultaneous_resolution(family(2, 1, {{{3, 0, 0}, 1}, {{0, 2, 0}, 1}}));
    for (const auto& c : R3.charts) {
        EXPECT_EQ(abs(det(c.chart.gens)), 1);
        EXPECT_NE(c.status, ChartStatus::failed);
    }
}

TEST(Resolution, Rejections) {
    EXPECT_THROW(simultaneous_resolution(family(2, 1, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{1, 1, 1}, 1}})),
                 PreconditionError);
    // degenerate base
    EXPECT_THROW(simultaneous_resolution(family(2, 1, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 2, 0}, 1}})),
                 PreconditionError);
    // not convenient
    EXPECT_THROW(simultaneous_resolution(family(2, 1, {{{2, 1, 0}, 1}, {{1, 2, 0}, 1}})), PreconditionError);
}

TEST(Resolution, ThreadCountDoesNotChangeCharts) {
    ResolutionOptions one, four;
    four.threads = 4;
    auto a = simultaneous_resolution(bs_family(), one), b = simultaneous_resolution(bs_family(), four);
    ASSERT_EQ(a.charts.size(), b.charts.size());
    for (std::size_t k = 0; k < a.charts.size(); ++k) {
        EXPECT_EQ(a.charts[k].chart.gens, b.charts[k].chart.gens);
        EXPECT_EQ(a.charts[k].transform.Fbar, b.charts[k].transform.Fbar);
        EXPECT_EQ(a.charts[k].status, b.charts[k].status);
    }
}

TEST(Smoothness, SkipLeavesNonUnitChartsUnchecked) {
    ResolutionOptions o;
    o.skip_smoothness = true;
    auto R = simultaneous_resolution(bs_family(), o);
    EXPECT_EQ(R.count(ChartStatus::smooth_verified), 0);
    EXPECT_EQ(R.count(ChartStatus::unchecked), 1);
}
