#pragma once
// Good apices and the combinatorial test for ν(S) = ν(S').

#include "newton_number.hpp"

#include <optional>

namespace nf {

struct BoundaryEdge {
    Point from, to;  // from is the vertex the edge was requested at
};

struct ApexCandidate {
    int axis = 0;  // 0-based index in I^c
    BoundaryEdge edge;
    Point beta;
    bool good = false;
};

struct ApexCertificate {
    Point alpha;
    CoordSet I;
    int axis = 0;
    BoundaryEdge edge;
    Point beta;
    bool good = false;
    std::vector<ApexCandidate> candidates;  // every axis that has an apex
};

inline std::vector<BoundaryEdge> boundary_edges_at(const NewtonPolyhedron& G, const Point& alpha) {
    std::vector<BoundaryEdge> r;
    for (auto& [a, b] : edges_at_vertex(G, alpha)) r.push_back({a, b});
    return r;
}

// Ver(S) points on the segment, ordered by distance from edge.from.
inline std::vector<Point> vertices_on_edge(const BoundaryEdge& e, const std::vector<Point>& ver) {
    std::vector<std::pair<Rat, Point>> hits;
    Point d = sub(e.to, e.from);
    for (const auto& v : ver) {
        auto t = solve_combination({d}, sub(v, e.from));
        if (t && (*t)[0] >= 0 && (*t)[0] <= 1) hits.emplace_back((*t)[0], v);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<Point> r;
    for (auto& h : hits) r.push_back(h.second);
    return r;
}

enum class EdgeConvenience { not_convenient, convenient, strict };

inline const char* to_string(EdgeConvenience c) {
    switch (c) {
        case EdgeConvenience::convenient: return "convenient";
        case EdgeConvenience::strict: return "strict";
        default: return "not";
    }
}

struct EdgeConvenienceResult {
    EdgeConvenience verdict = EdgeConvenience::not_convenient;
    bool vacuous = false;  // E ∩ Ver(S) empty
};

inline EdgeConvenienceResult edge_convenience(const BoundaryEdge& e, const SupportSet& S, CoordSet I, CoordSet J) {
    if (!(I.subset_of(J) && I != J)) throw PreconditionError("edge_convenience: I must be a proper subset of J");
    const int n = S.n;
    auto betas = vertices_on_edge(e, gamma_plus(S).vertices);
    EdgeConvenienceResult r;
    if (betas.empty()) {
        r.vacuous = true;
        r.verdict = EdgeConvenience::strict;
        return r;
    }
    CoordSet JI(J.bits & ~I.bits), Jc = J.complement(n);
    bool strict = true;
    for (const auto& b : betas) {
        for (int i : JI.indices())
            if (b[i] < 1) return r;
        for (int i : Jc.indices())
            if (b[i] != 0) return r;
        bool some = false;
        for (int i : JI.indices())
            if (b[i] > 1) some = true;
        strict = strict && some;
    }
    r.verdict = strict ? EdgeConvenience::strict : EdgeConvenience::convenient;
    return r;
}

// Apex search for a new vertex alpha of Γ(S'). Empty when alpha has full support
// or no axis i ∈ I^c has a unique edge leaving {x_i = 0}.
inline std::optional<ApexCertificate> find_apex(const NewtonPolyhedron& G, const NewtonPolyhedron& Gp,
                                                const Point& alpha) {
    if (Gp.vertex_index(alpha) < 0) throw PreconditionError("find_apex: " + to_string(alpha) + " is not a vertex of Γ(S')");
    if (G.vertex_index(alpha) >= 0) throw PreconditionError("find_apex: " + to_string(alpha) + " is already a vertex of Γ(S)");
    const int n = Gp.n;
    CoordSet I = support(alpha);
    CoordSet Ic = I.complement(n);
    if (Ic.empty()) return std::nullopt;
    auto edges = boundary_edges_at(Gp, alpha);
    std::vector<ApexCandidate> cands;
    for (int i : Ic.indices()) {
        std::vector<BoundaryEdge> leaving;
        for (const auto& e : edges)
            if (e.to[i] != 0) leaving.push_back(e);
        if (leaving.size() != 1) continue;
        auto on = vertices_on_edge(leaving[0], G.vertices);
        if (on.empty()) continue;
        ApexCandidate c{i, leaving[0], on.front(), true};
        for (int j : Ic.indices())
            if (c.beta[j] != (j == i ? 1 : 0)) c.good = false;
        cands.push_back(std::move(c));
    }
    if (cands.empty()) return std::nullopt;
    const ApexCandidate* pick = &cands.front();
    for (const auto& c : cands)
        if (c.good) {
            pick = &c;
            break;
        }
    ApexCertificate cert{alpha, I, pick->axis, pick->edge, pick->beta, pick->good, cands};
    return cert;
}

inline std::optional<ApexCertificate> find_apex(const SupportSet& S, const SupportSet& Sp, const Point& alpha) {
    return find_apex(gamma_plus(S), gamma_plus(Sp), alpha);
}

struct MuConstantResult {
    bool verdict = true;
    std::vector<Point> verd;
    std::vector<std::optional<ApexCertificate>> certificates;  // parallel to verd
    Rat nu_s, nu_s_prime;
    bool both_convenient = true;
    std::vector<std::string> warnings;
};

// Every new vertex has a good apex; cross-checked against the exact ν values.
// Pre-convenient inputs are accepted, the cross-check then only warns.
inline MuConstantResult mu_constant_test(const SupportSet& S, const SupportSet& Sp) {
    if (S.points.empty() || Sp.points.empty()) throw InputError("mu_constant_test: empty support set");
    if (S.n != Sp.n) throw InputError("mu_constant_test: dimension mismatch");
    NewtonPolyhedron G = gamma_plus(S), Gp = gamma_plus(Sp);
    require_pre_convenient(G, "mu_constant_test (base)");
    require_pre_convenient(Gp, "mu_constant_test (deformed)");
    MuConstantResult r;
    r.verd = verd(G, Gp);
    const CoordSet all = CoordSet::full(S.n);
    r.both_convenient = convenience(G, all).verdict == Convenience::convenient &&
                        convenience(Gp, all).verdict == Convenience::convenient;
    if (!r.both_convenient) r.warnings.push_back("inputs are only pre-convenient; the criterion is not guaranteed");
    for (const auto& a : r.verd) {
        auto c = find_apex(G, Gp, a);
        if (!c || !c->good) r.verdict = false;
        r.certificates.push_back(std::move(c));
    }
    r.nu_s = newton_number_set(S);
    r.nu_s_prime = newton_number_set(Sp);
    bool metric = r.nu_s == r.nu_s_prime;
    if (metric != r.verdict) {
        if (r.both_convenient)
            throw InternalError("mu_constant_test: apex verdict disagrees with the Newton numbers");
        r.warnings.push_back("apex verdict disagrees with the Newton numbers");
    }
    return r;
}

// Ver(S') \ Ver(S) avoids the open orthant, given ν(S) = ν(S').
inline bool vertex_location_check(const SupportSet& S, const SupportSet& Sp) {
    if (!is_convenient(S) || !is_convenient(Sp)) throw PreconditionError("vertex_location_check: inputs must be convenient");
    if (newton_number_set(S) != newton_number_set(Sp))
        throw PreconditionError("vertex_location_check: hypothesis violated, Newton numbers differ");
    for (const auto& a : verd(S, Sp))
        if (support(a) == CoordSet::full(S.n)) return false;
    return true;
}

}  // namespace nf
