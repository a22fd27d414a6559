#pragma once
// Newton non-degeneracy face by face, and the μ versus ν comparison.

#include "groebner.hpp"
#include "newton_number.hpp"

namespace nf {

enum class NondegMode { exact_low_dim, groebner, skip_high_faces };

inline NondegMode parse_nondeg_mode(const std::string& s) {
    if (s == "exact-low-dim") return NondegMode::exact_low_dim;
    if (s == "groebner") return NondegMode::groebner;
    if (s == "skip-high-faces") return NondegMode::skip_high_faces;
    throw InputError("unknown non-degeneracy mode '" + s + "'");
}

enum class FaceStatus { nondegenerate, degenerate, unchecked };

inline const char* to_string(FaceStatus s) {
    switch (s) {
        case FaceStatus::nondegenerate: return "non-degenerate";
        case FaceStatus::degenerate: return "degenerate";
        default: return "unchecked";
    }
}

struct FaceVerdict {
    std::vector<Point> vertices;
    int dim = 0;
    FaceStatus status = FaceStatus::unchecked;
    std::string method;
};

struct NondegReport {
    std::vector<FaceVerdict> faces;
    bool nondegenerate() const {
        return std::all_of(faces.begin(), faces.end(), [](const FaceVerdict& f) { return f.status == FaceStatus::nondegenerate; });
    }
    bool any_degenerate() const {
        return std::any_of(faces.begin(), faces.end(), [](const FaceVerdict& f) { return f.status == FaceStatus::degenerate; });
    }
};

// Terms of f whose exponents lie on the face (equality on all its facets).
inline Poly face_polynomial(const Poly& f, const NewtonPolyhedron& G, const NFace& face) {
    Poly r(f.nvars);
    for (const auto& t : f.terms) {
        Point x;
        for (int i = 0; i < f.nvars; ++i) x.push_back(Rat(t.m.e[i]));
        bool on = true;
        for (int k : face.facets)
            if (dot(G.facets[k].normal, x) != G.facets[k].offset) on = false;
        if (on) r.terms.push_back(t);
    }
    return r;
}

// The partials of g have a common zero in the torus iff 1 is not in (∂g, x1..xn t - 1).
inline FaceStatus torus_zero_test(const Poly& g, long budget) {
    const int n = g.nvars;
    const int N = n + 1;
    auto lift = [&](const Poly& p) {
        Poly q(N);
        q.terms = p.terms;
        return q;
    };
    std::vector<Poly> gens;
    for (int i = 0; i < n; ++i) gens.push_back(lift(g.derivative(i)));
    std::vector<int> e(N, 1);
    gens.push_back(Poly::monomial(N, e) - Poly::constant(N, 1));
    try {
        return contains_one(groebner_basis(gens, budget)) ? FaceStatus::nondegenerate : FaceStatus::degenerate;
    } catch (const BudgetExceeded&) {
        return FaceStatus::unchecked;
    }
}

inline FaceStatus edge_test(const Poly& fg, const Point& a, const Point& b) {
    const int n = fg.nvars;
    Point d = primitive_vector(sub(b, a));
    UPoly P;
    for (const auto& t : fg.terms) {
        Point x;
        for (int i = 0; i < n; ++i) x.push_back(Rat(t.m.e[i]));
        auto k = solve_combination({d}, sub(x, a));
        if (!k || !is_integer((*k)[0]) || (*k)[0] < 0) throw InternalError("edge_test: term off the edge lattice");
        std::size_t idx = (*k)[0].get_num().get_ui();
        if (P.size() <= idx) P.resize(idx + 1, Rat(0));
        P[idx] += t.c;
    }
    trim(P);
    UPoly g = ugcd(P, uderiv(P));
    return g.size() <= 1 ? FaceStatus::nondegenerate : FaceStatus::degenerate;
}

inline NondegReport nondegeneracy_check(const Poly& f, NondegMode mode = NondegMode::exact_low_dim,
                                        long budget = 200000) {
    if (f.is_zero()) throw InputError("nondegeneracy_check: zero polynomial");
    std::vector<Point> pts;
    for (const auto& p : support_points(f))
        if (!is_zero(p)) pts.push_back(p);
    if (pts.empty()) throw PreconditionError("nondegeneracy_check: polynomial is constant");
    NewtonPolyhedron G = gamma_plus(make_support(f.nvars, pts));
    NondegReport rep;
    for (int fi : G.compact_faces()) {
        const NFace& face = G.faces[fi];
        FaceVerdict v;
        for (int k : face.vertices) v.vertices.push_back(G.vertices[k]);
        v.dim = face.dim;
        Poly fg = face_polynomial(f, G, face);
        if (face.dim == 0) {
            v.status = FaceStatus::nondegenerate;
            v.method = "monomial";
        } else if (face.dim == 1 && mode != NondegMode::groebner) {
            v.status = edge_test(fg, v.vertices[0], v.vertices[1]);
            v.method = "squarefree";
        } else if (face.dim >= 2 && mode == NondegMode::skip_high_faces) {
            v.status = FaceStatus::unchecked;
            v.method = "skipped";
        } else {
            v.status = torus_zero_test(fg, budget);
            v.method = "groebner";
        }
        rep.faces.push_back(std::move(v));
    }
    return rep;
}

// ---------------------------------------------------------------- μ >= ν

struct KouchnirenkoReport {
    std::optional<long> mu;
    SeriesResult nu;
    NondegReport nondeg;
    bool inequality_holds = true;
    bool equality_expected = false;
    bool equality_holds = false;
    std::string note;
};

inline KouchnirenkoReport kouchnirenko_crosscheck(const Poly& f, long budget = 2000000, long cap = 64) {
    KouchnirenkoReport r;
    MilnorResult m = milnor_number(f, 8, 128, budget);
    r.mu = m.mu;
    r.note = m.note;
    std::vector<Point> pts;
    for (const auto& p : support_points(f))
        if (!is_zero(p)) pts.push_back(p);
    r.nu = newton_number_series(make_support(f.nvars, pts), cap);
    r.nondeg = nondegeneracy_check(f);
    r.equality_expected = r.nondeg.nondegenerate();
    if (!r.mu) return r;
    Rat mu(*r.mu);
    r.inequality_holds = mu >= r.nu.value;
    r.equality_holds = mu == r.nu.value;
    if (!r.inequality_holds) throw InternalError("kouchnirenko_crosscheck: mu < nu");
    if (r.equality_expected && r.nu.stabilized && !r.equality_holds)
        throw InternalError("kouchnirenko_crosscheck: non-degenerate but mu != nu");
    return r;
}

}  // namespace nf
