#include "newtonfan/newton_polyhedron.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nf;
using oracle::P;
using oracle::Q;

namespace {

SupportSet bs_base() { return make_support({P({5, 0, 0}), P({0, 7, 1}), P({0, 0, 15}), P({0, 8, 0})}); }
SupportSet bs_generic() { return augment(bs_base(), {P({1, 6, 0})}); }

}  // namespace

TEST(GammaPlus, VerticesOfStaircase) {
    auto G = gamma_plus(make_support({P({0, 3}), P({1, 2}), P({2, 1}), P({4, 0}), P({3, 1})}));
    EXPECT_EQ(G.vertices, (std::vector<Point>{P({0, 3}), P({2, 1}), P({4, 0})}));
}

TEST(GammaPlus, TwoPointsOneCompactEdge) {
    auto G = gamma_plus(make_support({P({2, 0}), P({0, 2})}));
    EXPECT_EQ(G.vertices.size(), 2u);
    int compact_edges = 0;
    for (const auto& f : G.faces)
        if (f.dim == 1 && f.compact()) ++compact_edges;
    EXPECT_EQ(compact_edges, 1);
    EXPECT_EQ(G.compact_facets().size(), 1u);
}

TEST(GammaPlus, BrianconSpederVertices) {
    auto G = gamma_plus(bs_generic());
    EXPECT_EQ(G.vertices, bs_generic().points);
    for (const auto& h : G.facets)
        for (const auto& c : h.normal) EXPECT_GE(c, 0);
}

TEST(GammaPlus, ContainsMatchesDominationOfSupport) {
    // x ∈ Γ₊ iff x dominates a convex combination; points dominating a support point are inside
    oracle::Gen g(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto S = make_support(g.convenient_support(3, 4));
        auto G = gamma_plus(S);
        for (const auto& p : S.points) {
            EXPECT_TRUE(G.contains(p));
            EXPECT_TRUE(G.contains(add(p, P({1, 0, 2}))));
        }
        EXPECT_FALSE(G.contains(P({0, 0, 0})));
        for (const auto& v : G.vertices) EXPECT_TRUE(std::binary_search(S.points.begin(), S.points.end(), v));
    }
}

TEST(GammaMinus, TriangleAndQuadrilateral) {
    EXPECT_EQ(region_volume(gamma_minus(make_support({P({2, 0}), P({0, 2})}))), 2);
    auto S = make_support({P({2, 0}), P({0, 2}), Q({"3/4", "1"})});
    auto G = gamma_plus(S);
    EXPECT_EQ(G.vertices.size(), 3u);
    EXPECT_EQ(region_volume(gamma_minus(S)), oracle::shoelace({P({0, 0}), P({2, 0}), Q({"3/4", "1"}), P({0, 2})}));
    EXPECT_EQ(region_volume(gamma_minus(S)), Rat(7, 4));
}

TEST(GammaMinus, UnboundedIsRejected) {
    EXPECT_THROW(gamma_minus(make_support({P({3, 0})})), PreconditionError);
    try {
        gamma_minus(make_support({P({3, 0})}));
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("axis 2"), std::string::npos);
    }
}

TEST(GammaMinus, AreaMatchesShoelaceOnRandom2D) {
    oracle::Gen g(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto pts = g.convenient_support(2, 5);
        auto S = make_support(pts);
        EXPECT_EQ(region_volume(gamma_minus(S)), oracle::shoelace(oracle::gamma_minus_polygon_2d(pts))) << trial;
    }
}

TEST(Restrict, Examples) {
    auto S = make_support({P({2, 0}), P({0, 2}), P({1, 1})});
    EXPECT_EQ(restrict_to(S, CoordSet::of({0})).points, (std::vector<Point>{P({2, 0})}));
    EXPECT_EQ(restrict_to(bs_base(), CoordSet::of({1, 2})).points,
              (std::vector<Point>{P({0, 0, 15}), P({0, 7, 1}), P({0, 8, 0})}));
    EXPECT_EQ(restrict_to(S, CoordSet::full(2)).points, S.points);
}

TEST(Convenience, Verdicts) {
    EXPECT_EQ(convenience(make_support({P({2, 0}), P({0, 2})}), CoordSet::full(2)).verdict, Convenience::convenient);
    auto r = convenience(make_support({P({2, 0}), P({0, 2}), Q({"3/4", "1"})}), CoordSet::full(2));
    EXPECT_EQ(r.verdict, Convenience::pre_convenient);
    EXPECT_EQ(r.failing_vertices, (std::vector<Point>{Q({"3/4", "1"})}));
    EXPECT_EQ(convenience(make_support({P({1, 0, 0}), P({0, 2, 0}), P({0, 0, 1})}), CoordSet::full(3)).verdict,
              Convenience::convenient);
    auto none = convenience(make_support({P({2, 1}), P({1, 2})}), CoordSet::full(2));
    EXPECT_EQ(none.verdict, Convenience::none);
    EXPECT_EQ(none.missing_axes, (std::vector<int>{0, 1}));
}

TEST(Augment, Examples) {
    auto S = make_support({P({2, 0}), P({0, 2})});
    EXPECT_EQ(augment(S, {Q({"3/2", "0"})}).points, (std::vector<Point>{P({0, 2}), Q({"3/2", "0"}), P({2, 0})}));
    EXPECT_EQ(augment(S, {}).points, S.points);
    EXPECT_EQ(augment(S, {P({2, 0})}).points, S.points);
    EXPECT_THROW(augment(S, {P({0, 0})}), InputError);
}

TEST(Verd, Examples) {
    EXPECT_EQ(verd(bs_base(), bs_generic()), (std::vector<Point>{P({1, 6, 0})}));
    EXPECT_TRUE(verd(bs_base(), bs_base()).empty());
    auto f = make_support({P({5, 0, 0}), P({0, 6, 0}), P({0, 0, 5}), P({0, 3, 2})});
    auto Fs = augment(f, {P({2, 2, 1}), P({4, 1, 0})});
    EXPECT_EQ(verd(f, Fs), (std::vector<Point>{P({4, 1, 0})}));
    EXPECT_THROW(verd(bs_generic(), bs_base()), PreconditionError);
}

TEST(Edges, AtVertex) {
    auto G = gamma_plus(make_support({P({2, 0}), P({1, 1}), P({0, 2})}));
    // (1,1) sits on the segment, so it is not a vertex and the edge is (2,0)-(0,2)
    EXPECT_EQ(G.vertex_index(P({1, 1})), -1);
    auto G2 = gamma_plus(make_support({P({3, 0}), P({1, 1}), P({0, 3})}));
    EXPECT_EQ(edges_at_vertex(G2, P({1, 1})).size(), 2u);
    auto Gb = gamma_plus(bs_generic());
    std::set<Point> others;
    for (auto& [a, b] : edges_at_vertex(Gb, P({1, 6, 0}))) others.insert(b);
    EXPECT_TRUE(others.count(P({0, 7, 1})));
    EXPECT_TRUE(others.count(P({5, 0, 0})));
    EXPECT_TRUE(others.count(P({0, 8, 0})));
}
