#pragma once
// Newton numbers of regions and support sets.

#include "newton_polyhedron.hpp"

namespace nf {

// V_k(Γ₋(S)) summed over coordinate subspaces, each piece computed inside R^I.
inline NewtonVolumeVector newton_volume_vector(const SupportSet& S) {
    if (S.points.empty()) throw InputError("newton number: empty support set");
    require_pre_convenient(gamma_plus(S), "newton number");
    NewtonVolumeVector out;
    out.V.assign(S.n + 1, Rat(0));
    out.V[0] = 1;
    for (std::uint32_t m = 1; m < (1u << S.n); ++m) {
        CoordSet I(m);
        out.V[I.size()] += gamma_minus_volume(gamma_plus(restrict_coords(S, I)));
    }
    return out;
}

inline Rat newton_number_set(const SupportSet& S) { return alternating_sum(newton_volume_vector(S).V); }

// ---------------------------------------------------------------- series

struct SeriesResult {
    Rat value;
    bool stabilized = true;  // false: value is only a lower bound, ν possibly infinite
    std::vector<std::pair<long, Rat>> trace;  // (m, ν of the augmented set)
};

namespace detail {

// For each added axis point m·e_j: the original vertices sharing a compact facet with it.
inline std::vector<std::vector<Point>> axis_signature(const NewtonPolyhedron& G, const std::vector<int>& axes,
                                                     long m, const SupportSet& S) {
    std::vector<std::vector<Point>> sig;
    for (int j : axes) {
        Point e(G.n, Rat(0));
        e[j] = m;
        std::set<Point> near;
        int vi = G.vertex_index(e);
        if (vi >= 0)
            for (int f : G.compact_facets()) {
                const auto& fv = G.facet_vertices[f];
                if (!std::binary_search(fv.begin(), fv.end(), vi)) continue;
                for (int v : fv)
                    if (std::binary_search(S.points.begin(), S.points.end(), G.vertices[v])) near.insert(G.vertices[v]);
            }
        sig.emplace_back(near.begin(), near.end());
    }
    return sig;
}

}  // namespace detail

// sup over m of ν(S ∪ {m·e_j : axis j has no vertex}), by doubling m up to cap.
inline SeriesResult newton_number_series(const SupportSet& S, long cap) {
    if (S.points.empty()) throw InputError("newton number: empty support set");
    if (cap < 1) throw InputError("newton number: cap must be positive");
    NewtonPolyhedron G = gamma_plus(S);
    auto axes = missing_axes(G);
    SeriesResult r;
    if (axes.empty()) {
        r.value = newton_number_set(S);
        return r;
    }
    bool have_prev = false;
    Rat prev;
    std::vector<std::vector<Point>> prev_sig;
    Rat best;
    for (long m = 1; m <= cap; m *= 2) {
        std::vector<Point> extra;
        for (int j : axes) {
            Point e(S.n, Rat(0));
            e[j] = m;
            extra.push_back(e);
        }
        SupportSet Sm = augment(S, extra);
        NewtonPolyhedron Gm = gamma_plus(Sm);
        Rat nu = newton_number_set(Sm);
        auto sig = detail::axis_signature(Gm, axes, m, S);
        r.trace.emplace_back(m, nu);
        if (!have_prev || nu > best) best = nu;
        if (have_prev && nu == prev && sig == prev_sig) {
            r.value = nu;
            r.stabilized = true;
            return r;
        }
        have_prev = true;
        prev = nu;
        prev_sig = std::move(sig);
    }
    r.value = best;
    r.stabilized = false;
    return r;
}

// ---------------------------------------------------------------- homothety

inline SupportSet partial_homothety(const SupportSet& S, CoordSet I, const Rat& lambda) {
    if (lambda <= 0) throw InputError("partial_homothety: lambda must be positive");
    std::vector<Point> pts;
    for (auto p : S.points) {
        for (int i : I.indices())
            if (i < S.n) p[i] *= lambda;
        pts.push_back(std::move(p));
    }
    return make_support(S.n, std::move(pts));
}

// ---------------------------------------------------------------- D(S,S') and I(S,S')

struct DISets {
    std::vector<CoordSet> D;
    CoordSet I;
    bool degenerate = false;  // D empty; I is then the whole index set by convention
};

inline DISets d_set_and_i_set(const SupportSet& S, const SupportSet& Sp) {
    verd(S, Sp);  // containment check
    DISets out;
    const int n = S.n;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        CoordSet J(m);
        // Γ₋ ∩ R^J is determined by Γ₊(S ∩ R^J) inside R^J
        auto a = restrict_coords(S, J), b = restrict_coords(Sp, J);
        std::vector<Point> va, vb;
        if (!a.points.empty()) va = gamma_plus(a).vertices;
        if (!b.points.empty()) vb = gamma_plus(b).vertices;
        if (va != vb) out.D.push_back(J);
    }
    std::sort(out.D.begin(), out.D.end());
    if (out.D.empty()) {
        out.I = CoordSet::full(n);
        out.degenerate = true;
    } else {
        out.I = CoordSet::full(n);
        for (auto J : out.D) out.I = CoordSet(out.I.bits & J.bits);
    }
    return out;
}

// ---------------------------------------------------------------- region differences

// closure(Γ₋(A) \ Γ₋(B)) for Γ₊(A) ⊆ Γ₊(B): cut every simplex of Γ₋(A) with Γ₊(B).
inline CompactRegion difference_region(const NewtonPolyhedron& A, const NewtonPolyhedron& B) {
    CompactRegion outer = gamma_minus(A);
    CompactRegion R;
    R.ambient_dim = A.n;
    for (const auto& s : outer.simplices) {
        ConvexPolytope P = convex_hull(s);
        for (const auto& h : B.facets) {
            P = clip(P, h);
            if (P.dim < A.n) break;
        }
        if (P.dim < A.n) continue;
        for (const auto& t : triangulate(P)) {
            std::vector<Point> sv;
            for (int i : t) sv.push_back(P.vertices[i]);
            R.simplices.push_back(std::move(sv));
        }
    }
    std::sort(R.simplices.begin(), R.simplices.end());
    return R;
}

inline CompactRegion difference_region(const SupportSet& A, const SupportSet& B) {
    return difference_region(gamma_plus(A), gamma_plus(B));
}

// ---------------------------------------------------------------- projection formula

// Smallest J with dim(Δ ∩ R^J) = |J|.
inline CoordSet minimal_full_support(const std::vector<Point>& simplex) {
    const int n = static_cast<int>(simplex[0].size());
    std::vector<CoordSet> all;
    for (std::uint32_t m = 0; m < (1u << n); ++m) all.push_back(CoordSet(m));
    std::sort(all.begin(), all.end());
    for (auto J : all) {
        auto f = simplex_face_in(simplex, J);
        if (!f.empty() && affine_dim(f) == J.size()) return J;
    }
    throw InternalError("minimal_full_support: none found");
}

struct ProjectionCheck {
    Rat lhs, rhs;
    Rat base_volume;     // |I|! V_{|I|}(P^I)
    Rat projected_nu;    // ν(π_I(P))
};

inline ProjectionCheck projection_formula_check(const CompactRegion& P, CoordSet I) {
    if (P.simplices.empty()) throw PreconditionError("projection formula: empty region");
    validate_region(P);
    if (region_contains_origin(P)) throw PreconditionError("projection formula: region contains the origin");
    std::vector<Point> base;
    for (std::size_t k = 0; k < P.simplices.size(); ++k) {
        const auto& s = P.simplices[k];
        CoordSet J = minimal_full_support(s);
        if (J != I)
            throw PreconditionError("projection formula: simplex " + std::to_string(k) +
                                    " has minimal full-supporting subspace " + J.str() + ", not " + I.str());
        auto f = simplex_face_in(s, I);
        if (k == 0) base = f;
        else if (f != base)
            throw PreconditionError("projection formula: simplex " + std::to_string(k) + " meets R^" + I.str() +
                                    " in a different face");
    }
    ProjectionCheck c;
    c.lhs = newton_number_region(P);
    std::vector<int> cols(I.size());
    std::iota(cols.begin(), cols.end(), 0);
    c.base_volume = Rat(factorial(I.size())) * simplex_volume(base, cols);
    c.projected_nu = newton_number_region(project_away(P, I));
    c.rhs = c.base_volume * c.projected_nu;
    return c;
}

// ---------------------------------------------------------------- positivity decomposition

struct PositivityPiece {
    CompactRegion Z;
    CoordSet I;           // minimal full-supporting subspace shared by the piece
    std::vector<Point> base;  // common face Z ∩ R^I
    Rat nu;
};

namespace detail {

// P ∩ R^J is pure |J|-dimensional and its top pieces are connected through (|J|-1)-faces.
inline bool disk_surrogate(const CompactRegion& P, CoordSet J) {
    const int k = J.size();
    std::vector<std::vector<Point>> top, low;
    for (const auto& s : P.simplices) {
        auto f = simplex_face_in(s, J);
        if (f.empty()) continue;
        if (affine_dim(f) == k) top.push_back(std::move(f));
        else low.push_back(std::move(f));
    }
    if (top.empty()) return false;
    std::sort(top.begin(), top.end());
    top.erase(std::unique(top.begin(), top.end()), top.end());
    for (const auto& f : low) {
        bool covered = false;
        for (const auto& t : top) {
            bool all = true;
            for (const auto& v : f)
                if (!simplex_contains(t, v)) all = false;
            if (all) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    std::vector<ConvexPolytope> hulls;
    for (const auto& t : top) hulls.push_back(convex_hull(t));
    std::vector<int> comp(top.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < top.size(); ++b)
            if (comp[b] < 0 && intersect(hulls[a], hulls[b]).dim >= k - 1) {
                comp[b] = 0;
                stack.push_back(static_cast<int>(b));
            }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace detail

inline std::vector<PositivityPiece> positivity_decomposition(const CompactRegion& P, CoordSet I) {
    const int n = P.ambient_dim;
    if (P.simplices.empty()) throw PreconditionError("positivity decomposition: empty region");
    validate_region(P);
    if (region_contains_origin(P)) throw PreconditionError("positivity decomposition: region contains the origin");
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        CoordSet J(m);
        if (!I.subset_of(J)) {
            for (const auto& s : P.simplices) {
                auto f = simplex_face_in(s, J);
                if (!f.empty() && affine_dim(f) == J.size())
                    throw PreconditionError("positivity decomposition: P meets R^" + J.str() + " in full dimension");
            }
        } else if (!detail::disk_surrogate(P, J)) {
            throw PreconditionError("positivity decomposition: P ∩ R^" + J.str() +
                                    " is not pure-dimensional and connected");
        }
    }
    CoordSet Ic = I.complement(n);
    for (const auto& s : P.simplices)
        for (const auto& v : s)
            for (int i : Ic.indices())
                if (v[i] > 0 && v[i] < 1)
                    throw PreconditionError("positivity decomposition: vertex " + to_string(v) + " has coordinate " +
                                            std::to_string(i + 1) + " strictly between 0 and 1");

    std::map<std::pair<CoordSet, std::vector<Point>>, CompactRegion> groups;
    for (const auto& s : P.simplices) {
        CoordSet J = minimal_full_support(s);
        auto key = std::make_pair(J, simplex_face_in(s, J));
        auto& g = groups[key];
        g.ambient_dim = n;
        g.simplices.push_back(s);
    }
    std::vector<PositivityPiece> out;
    Rat total = 0;
    for (auto& [key, Z] : groups) {
        PositivityPiece piece{Z, key.first, key.second, Rat(0)};
        ProjectionCheck c = projection_formula_check(Z, key.first);
        if (c.lhs != c.rhs) throw InternalError("positivity decomposition: projection formula fails on a piece");
        piece.nu = c.lhs;
        if (piece.nu < 0) throw InternalError("positivity decomposition: negative piece");
        total += piece.nu;
        out.push_back(std::move(piece));
    }
    if (total != newton_number_region(P))
        throw InternalError("positivity decomposition: pieces do not add up to ν(P)");
    return out;
}

}  // namespace nf
