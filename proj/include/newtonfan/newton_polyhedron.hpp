#pragma once
// Newton polyhedra Γ₊(S), their compact boundary, Γ₋(S) and convenience predicates.
//
// Γ₊(S) is unbounded, so it is handled through a compact slice of its
// homogenization: the cone over {1} × Γ₊(S) is generated by (1, s) and the rays
// (0, e_j); cutting it with the hyperplane Σy = 1 gives a polytope Q whose faces
// touching y₀ > 0 are the faces of Γ₊(S), and whose facet y₀ = 0 is the face at
// infinity.

#include "region.hpp"

namespace nf {

struct SupportSet {
    int n = 0;
    std::vector<Point> points;  // sorted, unique, nonnegative, none at the origin
};

inline SupportSet make_support(int n, std::vector<Point> pts) {
    if (n < 1) throw InputError("support: dimension must be positive");
    if (n > kMaxDim)
        throw PreconditionError("unsupported dimension " + std::to_string(n) + " (cap " + std::to_string(kMaxDim) + ")");
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != n) throw InputError("support: point " + to_string(p) + " has wrong length");
        if (!is_nonnegative(p)) throw InputError("support: negative coordinate in " + to_string(p));
        if (is_zero(p)) throw InputError("support: the origin is not allowed");
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return SupportSet{n, std::move(pts)};
}

inline SupportSet make_support(std::vector<Point> pts) {
    if (pts.empty()) throw InputError("support: empty set");
    int n = static_cast<int>(pts[0].size());
    return make_support(n, std::move(pts));
}

struct NFace {
    std::vector<int> vertices;  // indices into NewtonPolyhedron::vertices
    std::vector<int> rays;      // recession directions e_j contained in the face
    int dim = 0;
    std::vector<int> facets;    // facets of Γ₊ containing the face
    bool compact() const { return rays.empty(); }
};

struct NewtonPolyhedron {
    int n = 0;
    std::vector<Point> vertices;    // Ver(S), lexicographic
    std::vector<Halfspace> facets;  // primitive normals, all entries >= 0
    std::vector<std::vector<int>> facet_vertices;
    std::vector<NFace> faces;       // all faces except Γ₊ itself, sorted by (dim, vertices, rays)

    bool contains(const Point& x) const {
        for (const auto& h : facets)
            if (dot(h.normal, x) < h.offset) return false;
        return true;
    }
    int vertex_index(const Point& v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) return -1;
        return static_cast<int>(it - vertices.begin());
    }
    std::vector<int> compact_faces() const {
        std::vector<int> r;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i].compact()) r.push_back(static_cast<int>(i));
        return r;
    }
    // facets that are compact, i.e. whose normal is strictly positive
    std::vector<int> compact_facets() const {
        std::vector<int> r;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            bool pos = true;
            for (const auto& c : facets[i].normal)
                if (c == 0) pos = false;
            if (pos) r.push_back(static_cast<int>(i));
        }
        return r;
    }
    // support function h(p) = min over Γ₊ of <p, x>, p >= 0
    Rat support_value(const Point& p) const {
        Rat m = dot(p, vertices[0]);
        for (const auto& v : vertices) m = std::min(m, dot(p, v));
        return m;
    }
};

inline NewtonPolyhedron gamma_plus(const SupportSet& S) {
    if (S.points.empty()) throw InputError("gamma_plus: empty support set");
    const int n = S.n;
    std::vector<Point> q;
    for (const auto& s : S.points) {
        Rat t = 1 / (1 + coord_sum(s));
        Point y{t};
        for (const auto& c : s) y.push_back(c * t);
        q.push_back(std::move(y));
    }
    for (int j = 0; j < n; ++j) q.push_back(unit_vector(n + 1, j + 1));
    ConvexPolytope Q = convex_hull(q);
    if (Q.dim != n) throw InternalError("gamma_plus: homogenized slice has wrong dimension");

    NewtonPolyhedron G;
    G.n = n;
    // Q vertices split into points (y₀ > 0) and rays (y₀ = 0)
    std::vector<int> qpoint(Q.vertices.size(), -1), qray(Q.vertices.size(), -1);
    std::vector<std::pair<Point, int>> pts;
    for (std::size_t i = 0; i < Q.vertices.size(); ++i) {
        const Point& y = Q.vertices[i];
        if (y[0] == 0) {
            for (int j = 0; j < n; ++j)
                if (y[j + 1] != 0) qray[i] = j;
        } else {
            Point s;
            for (int j = 0; j < n; ++j) s.push_back(y[j + 1] / y[0]);
            pts.emplace_back(std::move(s), static_cast<int>(i));
        }
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        qpoint[pts[k].second] = static_cast<int>(k);
        G.vertices.push_back(pts[k].first);
    }

    // facets: homogenize a.y >= b on Σy = 1 to (a - b·1).y >= 0
    std::vector<int> facet_map(Q.facets.size(), -1);
    std::vector<std::pair<Halfspace, int>> hs;
    for (std::size_t f = 0; f < Q.facets.size(); ++f) {
        bool finite = false;
        for (int v : Q.facet_vertices[f])
            if (qpoint[v] >= 0) finite = true;
        if (!finite) continue;
        Point w = Q.facets[f].normal;
        for (auto& c : w) c -= Q.facets[f].offset;
        Point p(w.begin() + 1, w.end());
        Rat factor;
        Point pp = clear_denominators(p, &factor);
        Halfspace h{pp, -w[0] * factor};
        for (const auto& c : pp)
            if (c < 0) throw InternalError("gamma_plus: negative facet normal");
        hs.emplace_back(h, static_cast<int>(f));
    }
    std::sort(hs.begin(), hs.end());
    for (std::size_t k = 0; k < hs.size(); ++k) {
        facet_map[hs[k].second] = static_cast<int>(k);
        G.facets.push_back(hs[k].first);
        std::vector<int> vs;
        for (int v : Q.facet_vertices[hs[k].second])
            if (qpoint[v] >= 0) vs.push_back(qpoint[v]);
        std::sort(vs.begin(), vs.end());
        G.facet_vertices.push_back(std::move(vs));
    }

    // faces of Q with a finite vertex, except Q itself
    std::vector<std::set<int>> q_facets_of_vertex(Q.vertices.size());
    for (std::size_t f = 0; f < Q.facets.size(); ++f)
        for (int v : Q.facet_vertices[f]) q_facets_of_vertex[v].insert(static_cast<int>(f));
    for (std::size_t fi = 0; fi + 1 < Q.faces.size(); ++fi) {
        const Face& f = Q.faces[fi];
        NFace face;
        face.dim = f.dim;
        for (int v : f.vertices) {
            if (qpoint[v] >= 0) face.vertices.push_back(qpoint[v]);
            else face.rays.push_back(qray[v]);
        }
        if (face.vertices.empty()) continue;
        std::sort(face.vertices.begin(), face.vertices.end());
        std::sort(face.rays.begin(), face.rays.end());
        std::set<int> common = q_facets_of_vertex[f.vertices[0]];
        for (int v : f.vertices) {
            std::set<int> keep;
            for (int x : common)
                if (q_facets_of_vertex[v].count(x)) keep.insert(x);
            common = std::move(keep);
        }
        for (int x : common)
            if (facet_map[x] >= 0) face.facets.push_back(facet_map[x]);
        std::sort(face.facets.begin(), face.facets.end());
        G.faces.push_back(std::move(face));
    }
    std::sort(G.faces.begin(), G.faces.end(), [](const NFace& a, const NFace& b) {
        return std::tie(a.dim, a.vertices, a.rays) < std::tie(b.dim, b.vertices, b.rays);
    });
    return G;
}

inline SupportSet vertex_set(const NewtonPolyhedron& G) { return make_support(G.n, G.vertices); }

// S ∩ R^I, still in R^n.
inline SupportSet restrict_to(const SupportSet& S, CoordSet I) {
    SupportSet r{S.n, {}};
    for (const auto& p : S.points)
        if (in_subspace(p, I)) r.points.push_back(p);
    return r;
}

// S ∩ R^I written in the |I| coordinates of I.
inline SupportSet restrict_coords(const SupportSet& S, CoordSet I) {
    auto idx = I.indices();
    SupportSet r{static_cast<int>(idx.size()), {}};
    for (const auto& p : S.points)
        if (in_subspace(p, I)) r.points.push_back(take(p, idx));
    std::sort(r.points.begin(), r.points.end());
    return r;
}

inline SupportSet augment(const SupportSet& S, const std::vector<Point>& R) {
    std::vector<Point> pts = S.points;
    for (const auto& r : R) {
        if (is_zero(r)) throw InputError("augment: the origin cannot be added");
        pts.push_back(r);
    }
    return make_support(S.n, std::move(pts));
}

enum class Convenience { convenient, I_convenient, pre_convenient, none };

inline const char* to_string(Convenience c) {
    switch (c) {
        case Convenience::convenient: return "convenient";
        case Convenience::I_convenient: return "I-convenient";
        case Convenience::pre_convenient: return "pre-convenient";
        default: return "none";
    }
}

struct ConvenienceReport {
    Convenience verdict = Convenience::none;
    std::vector<int> missing_axes;       // axes without a vertex m·e_j (0-based)
    std::vector<Point> failing_vertices; // vertices with 0 < α_i < 1 for some i in I
};

// Axis points m·e_j present among the vertices.
inline std::vector<int> missing_axes(const NewtonPolyhedron& G) {
    std::vector<int> r;
    for (int j = 0; j < G.n; ++j) {
        bool hit = false;
        for (const auto& v : G.vertices)
            if (support(v) == CoordSet::of({j})) hit = true;
        if (!hit) r.push_back(j);
    }
    return r;
}

inline ConvenienceReport convenience(const NewtonPolyhedron& G, CoordSet I) {
    ConvenienceReport rep;
    rep.missing_axes = missing_axes(G);
    for (const auto& v : G.vertices)
        for (int i : I.indices())
            if (v[i] > 0 && v[i] < 1) {
                rep.failing_vertices.push_back(v);
                break;
            }
    if (!rep.missing_axes.empty()) rep.verdict = Convenience::none;
    else if (!rep.failing_vertices.empty()) rep.verdict = Convenience::pre_convenient;
    else if (I == CoordSet::full(G.n)) rep.verdict = Convenience::convenient;
    else rep.verdict = Convenience::I_convenient;
    return rep;
}

inline ConvenienceReport convenience(const SupportSet& S, CoordSet I) { return convenience(gamma_plus(S), I); }

inline bool is_pre_convenient(const SupportSet& S) {
    return !S.points.empty() && missing_axes(gamma_plus(S)).empty();
}

inline bool is_convenient(const SupportSet& S) {
    return !S.points.empty() && convenience(S, CoordSet::full(S.n)).verdict == Convenience::convenient;
}

inline void require_pre_convenient(const NewtonPolyhedron& G, const char* what) {
    auto miss = missing_axes(G);
    if (!miss.empty())
        throw PreconditionError(std::string(what) + ": unbounded along axis " + std::to_string(miss[0] + 1) +
                                " (no vertex on that axis)");
}

// Triangulated compact facets of Γ₊ as vertex lists.
inline std::vector<std::vector<Point>> boundary_simplices(const NewtonPolyhedron& G) {
    std::vector<std::vector<Point>> out;
    for (int f : G.compact_facets()) {
        std::vector<Point> pts;
        for (int v : G.facet_vertices[f]) pts.push_back(G.vertices[v]);
        ConvexPolytope F = convex_hull(pts);
        for (const auto& t : triangulate(F)) {
            std::vector<Point> s;
            for (int i : t) s.push_back(F.vertices[i]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

// Γ₋(S) as cones from the origin over the triangulated compact facets.
inline CompactRegion gamma_minus(const NewtonPolyhedron& G) {
    require_pre_convenient(G, "gamma_minus");
    CompactRegion R;
    R.ambient_dim = G.n;
    for (auto s : boundary_simplices(G)) {
        s.insert(s.begin(), Point(G.n, Rat(0)));
        R.simplices.push_back(std::move(s));
    }
    std::sort(R.simplices.begin(), R.simplices.end());
    return R;
}

inline CompactRegion gamma_minus(const SupportSet& S) {
    if (S.points.empty()) throw InputError("gamma_minus: empty support set");
    return gamma_minus(gamma_plus(S));
}

// n-volume of Γ₋ of a pre-convenient polyhedron, straight from its compact facets.
inline Rat gamma_minus_volume(const NewtonPolyhedron& G) {
    Rat v = 0;
    for (const auto& s : boundary_simplices(G)) {
        Matrix m(s.begin(), s.end());
        Rat d = det(m);
        if (d < 0) d = -d;
        v += d;
    }
    return v / Rat(factorial(G.n));
}

// Ver(S') \ Ver(S), requiring Γ₊(S) ⊆ Γ₊(S').
inline std::vector<Point> verd(const NewtonPolyhedron& G, const NewtonPolyhedron& Gp) {
    for (const auto& v : G.vertices)
        if (!Gp.contains(v))
            throw PreconditionError("verd: vertex " + to_string(v) + " of the base lies outside the larger polyhedron");
    std::vector<Point> r;
    for (const auto& v : Gp.vertices)
        if (G.vertex_index(v) < 0) r.push_back(v);
    return r;
}

inline std::vector<Point> verd(const SupportSet& S, const SupportSet& Sp) { return verd(gamma_plus(S), gamma_plus(Sp)); }

// Compact edges of Γ₊ through the vertex alpha, as (alpha, other endpoint).
inline std::vector<std::pair<Point, Point>> edges_at_vertex(const NewtonPolyhedron& G, const Point& alpha) {
    int a = G.vertex_index(alpha);
    if (a < 0) throw PreconditionError("edges_at_vertex: " + to_string(alpha) + " is not a vertex");
    std::vector<std::pair<Point, Point>> r;
    for (const auto& f : G.faces) {
        if (f.dim != 1 || !f.compact()) continue;
        if (f.vertices[0] == a) r.emplace_back(alpha, G.vertices[f.vertices[1]]);
        else if (f.vertices[1] == a) r.emplace_back(alpha, G.vertices[f.vertices[0]]);
    }
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace nf
