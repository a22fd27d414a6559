#pragma once
// Compact regions as unions of full-dimensional simplices with disjoint interiors,
// and their coordinate-subspace volume vectors.

#include "polytope.hpp"

namespace nf {

struct CompactRegion {
    int ambient_dim = 0;
    std::vector<std::vector<Point>> simplices;  // each has ambient_dim + 1 vertices
};

struct NewtonVolumeVector {
    std::vector<Rat> V;  // V[0..n]
};

namespace detail {

// Splits a family of k-dimensional polytopes in R^k into interior-disjoint convex
// pieces with the same union: each new piece has the accepted ones carved out.
inline std::vector<ConvexPolytope> disjoint_pieces(const std::vector<std::vector<Point>>& pieces, int k) {
    std::vector<ConvexPolytope> accepted;
    for (const auto& p : pieces) {
        std::vector<ConvexPolytope> frags{convex_hull(p)};
        for (const auto& C : accepted) {
            std::vector<ConvexPolytope> next;
            for (const auto& f : frags) {
                if (intersect(f, C).dim < k) {
                    next.push_back(f);
                    continue;
                }
                ConvexPolytope rest = f;
                for (const auto& h : C.facets) {
                    ConvexPolytope out = clip(rest, Halfspace{scale(h.normal, Rat(-1)), -h.offset});
                    if (out.dim == k) next.push_back(out);
                    rest = clip(rest, h);
                    if (rest.dim < k) break;
                }
            }
            frags = std::move(next);
        }
        for (auto& f : frags) accepted.push_back(std::move(f));
    }
    return accepted;
}

// Volume of a union of k-simplices in R^k whose interiors may overlap.
inline Rat union_volume(std::vector<std::vector<Point>> pieces, int k, bool disjoint) {
    for (auto& p : pieces) std::sort(p.begin(), p.end());
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    if (disjoint) {
        Rat v = 0;
        std::vector<int> cols(k);
        std::iota(cols.begin(), cols.end(), 0);
        for (const auto& p : pieces) v += simplex_volume(p, cols);
        return v;
    }
    if (k == 1) {
        std::vector<std::pair<Rat, Rat>> iv;
        for (const auto& p : pieces) iv.emplace_back(std::min(p[0][0], p[1][0]), std::max(p[0][0], p[1][0]));
        std::sort(iv.begin(), iv.end());
        Rat total = 0;
        bool open = false;
        Rat lo, hi;
        for (const auto& [a, b] : iv) {
            if (!open) {
                lo = a;
                hi = b;
                open = true;
            } else if (a <= hi) {
                hi = std::max(hi, b);
            } else {
                total += hi - lo;
                lo = a;
                hi = b;
            }
        }
        if (open) total += hi - lo;
        return total;
    }
    Rat v = 0;
    for (const auto& c : disjoint_pieces(pieces, k)) v += polytope_volume(c);
    return v;
}

inline bool simplex_contains(const std::vector<Point>& s, const Point& x) {
    // barycentric coordinates via affine combination
    const int k = static_cast<int>(s.size()) - 1;
    Matrix rows;
    for (int i = 1; i <= k; ++i) rows.push_back(sub(s[i], s[0]));
    auto lam = solve_combination(rows, sub(x, s[0]));
    if (!lam) return false;
    Rat rest = 1;
    for (const auto& l : *lam) {
        if (l < 0) return false;
        rest -= l;
    }
    return rest >= 0;
}

}  // namespace detail

// Vertices of the simplex lying in R^I, with the I-coordinates kept.
inline std::vector<Point> simplex_face_in(const std::vector<Point>& s, CoordSet I) {
    std::vector<Point> r;
    auto idx = I.indices();
    for (const auto& v : s)
        if (in_subspace(v, I)) r.push_back(take(v, idx));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

inline bool region_contains_origin(const CompactRegion& P) {
    Point o(P.ambient_dim, Rat(0));
    for (const auto& s : P.simplices)
        if (detail::simplex_contains(s, o)) return true;
    return false;
}

// k-volume of P ∩ R^I, k = |I|.
inline Rat subspace_volume(const CompactRegion& P, CoordSet I) {
    const int n = P.ambient_dim;
    const int k = I.size();
    if (k == 0) return region_contains_origin(P) ? 1 : 0;
    std::vector<std::vector<Point>> pieces;
    for (const auto& s : P.simplices) {
        auto f = simplex_face_in(s, I);
        if (affine_dim(f) == k) pieces.push_back(std::move(f));
    }
    // faces in a coordinate hyperplane of interior-disjoint n-simplices cannot overlap
    return detail::union_volume(std::move(pieces), k, k >= n - 1);
}

inline NewtonVolumeVector volume_vector(const CompactRegion& P) {
    const int n = P.ambient_dim;
    NewtonVolumeVector out;
    out.V.assign(n + 1, Rat(0));
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        CoordSet I(m);
        out.V[I.size()] += subspace_volume(P, I);
    }
    return out;
}

// n! V_n - (n-1)! V_{n-1} + ... + (-1)^n V_0
inline Rat alternating_sum(const std::vector<Rat>& V) {
    const int n = static_cast<int>(V.size()) - 1;
    Rat nu = 0;
    for (int k = 0; k <= n; ++k) {
        Rat term = Rat(factorial(k)) * V[k];
        if ((n - k) % 2) nu -= term;
        else nu += term;
    }
    return nu;
}

inline Rat newton_number_region(const CompactRegion& P) { return alternating_sum(volume_vector(P).V); }

inline Rat region_volume(const CompactRegion& P) {
    return subspace_volume(P, CoordSet::full(P.ambient_dim));
}

// Exact validation: nonnegative coordinates, full-dimensional simplices, pairwise interior-disjoint.
inline void validate_region(const CompactRegion& P) {
    const int n = P.ambient_dim;
    std::vector<ConvexPolytope> hulls;
    for (const auto& s : P.simplices) {
        if (static_cast<int>(s.size()) != n + 1) throw InputError("region: simplex vertex count");
        for (const auto& v : s)
            if (!is_nonnegative(v)) throw InputError("region: vertex outside the orthant");
        if (affine_dim(s) != n) throw InputError("region: degenerate simplex");
        hulls.push_back(convex_hull(s));
    }
    for (std::size_t i = 0; i < hulls.size(); ++i)
        for (std::size_t j = i + 1; j < hulls.size(); ++j)
            if (intersect(hulls[i], hulls[j]).dim == n)
                throw InputError("region: simplices " + std::to_string(i) + " and " + std::to_string(j) +
                                 " overlap");
}

// Projection π_I: drop the coordinates in I; the image lives in R^{n-|I|}.
// Images of different simplices may overlap, so they are made disjoint first.
inline CompactRegion project_away(const CompactRegion& P, CoordSet I) {
    const int n = P.ambient_dim;
    auto keep = I.complement(n).indices();
    const int k = static_cast<int>(keep.size());
    CompactRegion out;
    out.ambient_dim = k;
    std::vector<std::vector<Point>> images;
    for (const auto& s : P.simplices) {
        std::vector<Point> img;
        for (const auto& v : s) img.push_back(take(v, keep));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (affine_dim(img) == k) images.push_back(std::move(img));
    }
    if (k == 0) {
        if (!images.empty()) out.simplices.push_back({Point{}});
        return out;
    }
    for (const auto& h : detail::disjoint_pieces(images, k))
        for (const auto& t : triangulate(h)) {
            std::vector<Point> sv;
            for (int i : t) sv.push_back(h.vertices[i]);
            out.simplices.push_back(std::move(sv));
        }
    return out;
}

}  // namespace nf
