#pragma once
// Lattice cones in the orthant, the Newton fan and its refinements.
//
// A pointed cone in the orthant is handled through its slice with Σx = 1, a
// polytope whose faces are the cone's faces.  Regular refinements use global
// stellar subdivisions at the smallest point of a fundamental parallelepiped.

#include "apex.hpp"

namespace nf {

struct LatticeCone {
    std::vector<Point> gens;  // primitive, lexicographically sorted, extremal
    int dim() const { return gens.empty() ? 0 : rank(gens); }
    bool simplicial() const { return static_cast<int>(gens.size()) == dim(); }
    friend bool operator<(const LatticeCone& a, const LatticeCone& b) {
        if (a.gens.size() != b.gens.size()) return a.gens.size() < b.gens.size();
        return a.gens < b.gens;
    }
    friend bool operator==(const LatticeCone& a, const LatticeCone& b) { return a.gens == b.gens; }
};

struct Fan {
    int ambient = 0;
    std::vector<LatticeCone> cones;  // maximal cones, sorted
};

namespace detail {

inline Point slice_point(const Point& g) { return scale(g, 1 / coord_sum(g)); }

inline ConvexPolytope slice(const LatticeCone& c) {
    std::vector<Point> pts;
    for (const auto& g : c.gens) pts.push_back(slice_point(g));
    return convex_hull(pts);
}

// generator whose slice point is p
inline Point gen_of(const Point& p) {
    return clear_denominators(p);
}

}  // namespace detail

// Primitive generators, redundant ones dropped.
inline LatticeCone make_cone(std::vector<Point> gens) {
    if (gens.empty()) throw InputError("cone: no generators");
    for (auto& g : gens) {
        if (!is_nonnegative(g) || is_zero(g)) throw InputError("cone: generator " + to_string(g) + " is not in the orthant");
        g = clear_denominators(g);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    LatticeCone c{gens};
    ConvexPolytope s = detail::slice(c);
    c.gens.clear();
    for (const auto& v : s.vertices) c.gens.push_back(detail::gen_of(v));
    std::sort(c.gens.begin(), c.gens.end());
    return c;
}

inline bool cone_contains(const LatticeCone& c, const Point& x) {
    if (is_zero(x)) return true;
    if (!is_nonnegative(x)) return false;
    return detail::slice(c).contains(detail::slice_point(x));
}

// All nonzero faces of a cone, including itself.
inline std::vector<LatticeCone> cone_faces(const LatticeCone& c) {
    ConvexPolytope s = detail::slice(c);
    std::vector<LatticeCone> out;
    for (const auto& f : s.faces) {
        LatticeCone fc;
        for (int v : f.vertices) fc.gens.push_back(detail::gen_of(s.vertices[v]));
        std::sort(fc.gens.begin(), fc.gens.end());
        out.push_back(std::move(fc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_regular_cone(const LatticeCone& c) {
    if (!c.simplicial()) throw PreconditionError("is_regular_cone: cone is not simplicial");
    Int g = 0;
    for (const auto& m : maximal_minors(c.gens)) g = gcd(g, Int(m.get_num()));
    return g == 1;
}

// Index of the sublattice spanned by the generators in its saturation.
inline Int multiplicity(const LatticeCone& c) {
    Int g = 0;
    for (const auto& m : maximal_minors(c.gens)) g = gcd(g, Int(m.get_num()));
    return g;
}

inline Rat support_function(const NewtonPolyhedron& G, const Point& alpha) {
    for (const auto& a : alpha)
        if (a < 0) throw PreconditionError("support_function: " + to_string(alpha) + " is not in the orthant");
    return G.support_value(alpha);
}

inline Rat support_function(const SupportSet& S, const Point& alpha) { return support_function(gamma_plus(S), alpha); }

// σ_v: normals of the facets through the vertex v.
inline LatticeCone newton_cone_at(const NewtonPolyhedron& G, const Point& v) {
    int vi = G.vertex_index(v);
    if (vi < 0) throw PreconditionError("newton_cone_at: " + to_string(v) + " is not a vertex");
    std::vector<Point> gens;
    for (std::size_t f = 0; f < G.facets.size(); ++f) {
        const auto& fv = G.facet_vertices[f];
        if (std::binary_search(fv.begin(), fv.end(), vi)) gens.push_back(G.facets[f].normal);
    }
    return make_cone(gens);
}

inline Fan newton_fan(const NewtonPolyhedron& G) {
    Fan F{G.n, {}};
    for (const auto& v : G.vertices) F.cones.push_back(newton_cone_at(G, v));
    std::sort(F.cones.begin(), F.cones.end());
    return F;
}

inline Fan newton_fan(const SupportSet& S) { return newton_fan(gamma_plus(S)); }

// Every cone of the fan (face closure), sorted by (size, generators).
inline std::vector<LatticeCone> all_cones(const Fan& F) {
    std::set<LatticeCone> s;
    for (const auto& c : F.cones)
        for (auto& f : cone_faces(c)) s.insert(std::move(f));
    return {s.begin(), s.end()};
}

inline std::vector<Point> fan_rays(const Fan& F) {
    std::set<Point> r;
    for (const auto& c : F.cones) r.insert(c.gens.begin(), c.gens.end());
    return {r.begin(), r.end()};
}

// Two cones meet in a common face.
inline bool cones_compatible(const LatticeCone& a, const LatticeCone& b) {
    ConvexPolytope sa = detail::slice(a), sb = detail::slice(b);
    ConvexPolytope I = intersect(sa, sb);
    if (I.empty()) return true;
    auto is_face_of = [&](const ConvexPolytope& P) {
        std::vector<int> vs;
        for (const auto& v : I.vertices) {
            auto it = std::lower_bound(P.vertices.begin(), P.vertices.end(), v);
            if (it == P.vertices.end() || *it != v) return false;
            vs.push_back(static_cast<int>(it - P.vertices.begin()));
        }
        std::sort(vs.begin(), vs.end());
        for (const auto& f : P.faces)
            if (f.vertices == vs) return true;
        return false;
    };
    return is_face_of(sa) && is_face_of(sb);
}

inline bool fan_compatible(const Fan& F) {
    for (std::size_t i = 0; i < F.cones.size(); ++i)
        for (std::size_t j = i + 1; j < F.cones.size(); ++j)
            if (!cones_compatible(F.cones[i], F.cones[j])) return false;
    return true;
}

// ---------------------------------------------------------------- simplicial refinement

// Pulling triangulation of every cone with one global ray order: rays listed in
// `first` come first, the rest lexicographically.  Faces shared by two cones are
// triangulated identically, so the result is again a fan.
inline Fan simplicialize(const Fan& F, const std::vector<Point>& first = {}) {
    auto rank_of = [&](const Point& g) -> std::pair<int, Point> {
        for (std::size_t k = 0; k < first.size(); ++k)
            if (clear_denominators(first[k]) == g) return {static_cast<int>(k), Point{}};
        return {static_cast<int>(first.size()), g};
    };
    std::set<LatticeCone> out;
    for (const auto& c : F.cones) {
        if (c.simplicial()) {
            out.insert(c);
            continue;
        }
        ConvexPolytope s = detail::slice(c);
        std::vector<Point> gens;
        for (const auto& v : s.vertices) gens.push_back(detail::gen_of(v));
        std::map<int, std::vector<std::vector<int>>> memo;
        std::function<std::vector<std::vector<int>>(int)> tri = [&](int fi) {
            auto it = memo.find(fi);
            if (it != memo.end()) return it->second;
            const Face& f = s.faces[fi];
            std::vector<std::vector<int>> res;
            if (f.dim == 0) {
                res.push_back(f.vertices);
            } else {
                int v0 = f.vertices.front();
                for (int v : f.vertices)
                    if (rank_of(gens[v]) < rank_of(gens[v0])) v0 = v;
                for (int g : f.facets) {
                    const auto& gv = s.faces[g].vertices;
                    if (std::binary_search(gv.begin(), gv.end(), v0)) continue;
                    for (auto t : tri(g)) {
                        t.push_back(v0);
                        res.push_back(std::move(t));
                    }
                }
            }
            memo[fi] = res;
            return res;
        };
        for (const auto& t : tri(static_cast<int>(s.faces.size()) - 1)) {
            LatticeCone sc;
            for (int v : t) sc.gens.push_back(gens[v]);
            std::sort(sc.gens.begin(), sc.gens.end());
            out.insert(std::move(sc));
        }
    }
    return Fan{F.ambient, {out.begin(), out.end()}};
}

// ---------------------------------------------------------------- regular refinement

// Nonzero lattice points Σλ_i g_i with 0 <= λ_i < 1; the one with the smallest
// coordinate sum (lexicographic ties).  Empty iff the cone is regular.
inline std::optional<Point> stellar_point(const LatticeCone& c) {
    if (!c.simplicial()) throw PreconditionError("stellar_point: cone is not simplicial");
    const int k = static_cast<int>(c.gens.size());
    const int n = static_cast<int>(c.gens[0].size());
    if (multiplicity(c) == 1) return std::nullopt;
    // columns with the smallest nonzero k x k minor give coordinates on the span
    std::vector<int> best_cols;
    Rat best_abs = 0;
    std::vector<int> cols(k);
    std::function<void(int, int)> pick = [&](int start, int depth) {
        if (depth == k) {
            Matrix m(k, Point(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m[i][j] = c.gens[i][cols[j]];
            Rat d = abs(det(m));
            if (d != 0 && (best_cols.empty() || d < best_abs)) {
                best_abs = d;
                best_cols = cols;
            }
            return;
        }
        for (int col = start; col < n; ++col) {
            cols[depth] = col;
            pick(col + 1, depth + 1);
        }
    };
    pick(0, 0);
    // λ with λ·M integral form the group generated by the rows of M^{-1} mod 1
    Matrix M(k, Point(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M[i][j] = c.gens[i][best_cols[j]];
    // rows of M^{-1}: solve via rref of [M^T | I]
    Matrix MT(k, Point(2 * k, Rat(0)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) MT[i][j] = M[j][i];
        MT[i][k + i] = 1;
    }
    Echelon e = rref(MT);
    Matrix inv_t(k, Point(k));  // (M^T)^{-1} = (M^{-1})^T
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) inv_t[i][j] = e.rows[i][k + j];
    std::vector<Point> gensets;  // rows of M^{-1}
    for (int i = 0; i < k; ++i) {
        Point r(k);
        for (int j = 0; j < k; ++j) r[j] = inv_t[j][i];
        gensets.push_back(r);
    }
    auto frac = [](Point p) {
        for (auto& x : p) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
            x -= Rat(fl);
        }
        return p;
    };
    std::set<Point> seen{Point(k, Rat(0))};
    std::vector<Point> queue{Point(k, Rat(0))};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gensets) {
            Point nx = frac(add(queue[q], g));
            if (seen.insert(nx).second) queue.push_back(nx);
        }
    std::optional<Point> best;
    Rat best_sum;
    for (const auto& lam : seen) {
        if (is_zero(lam)) continue;
        Point w(n, Rat(0));
        for (int i = 0; i < k; ++i) w = add(w, scale(c.gens[i], lam[i]));
        if (!is_integral(w)) continue;
        Rat s = coord_sum(w);
        if (!best || s < best_sum || (s == best_sum && w < *best)) {
            best = w;
            best_sum = s;
        }
    }
    if (!best) throw InternalError("stellar_point: no interior lattice point in a non-regular cone");
    return best;
}

// Global stellar subdivision of a simplicial fan until every cone is regular.
// Non-regular faces are treated in order of increasing dimension, so regular
// faces are never touched.
inline Fan regularize_fan(Fan F, long max_steps = 100000) {
    for (const auto& c : F.cones)
        if (!c.simplicial()) throw PreconditionError("regularize: fan is not simplicial");
    for (long step = 0;; ++step) {
        if (step >= max_steps) throw BudgetExceeded("regularize: step budget exhausted");
        std::set<LatticeCone> faces;
        for (const auto& c : F.cones) {
            const int k = static_cast<int>(c.gens.size());
            for (std::uint32_t m = 1; m < (1u << k); ++m) {
                if (__builtin_popcount(m) < 2) continue;
                LatticeCone f;
                for (int i = 0; i < k; ++i)
                    if ((m >> i) & 1u) f.gens.push_back(c.gens[i]);
                faces.insert(std::move(f));
            }
        }
        const LatticeCone* bad = nullptr;
        for (const auto& f : faces)
            if (multiplicity(f) != 1) {
                bad = &f;
                break;
            }
        if (!bad) break;
        Point w = *stellar_point(*bad);
        std::set<LatticeCone> next;
        for (const auto& c : F.cones) {
            bool contains_face = std::all_of(bad->gens.begin(), bad->gens.end(), [&](const Point& g) {
                return std::binary_search(c.gens.begin(), c.gens.end(), g);
            });
            if (!contains_face) {
                next.insert(c);
                continue;
            }
            for (const auto& v : bad->gens) {
                LatticeCone nc;
                for (const auto& g : c.gens) nc.gens.push_back(g == v ? w : g);
                std::sort(nc.gens.begin(), nc.gens.end());
                next.insert(std::move(nc));
            }
        }
        F.cones.assign(next.begin(), next.end());
    }
    return F;
}

inline Fan regularize(const LatticeCone& c) {
    if (!c.simplicial()) throw PreconditionError("regularize: cone is not simplicial");
    return regularize_fan(Fan{static_cast<int>(c.gens[0].size()), {c}});
}

// ---------------------------------------------------------------- admissibility

struct AdmissibilityReport {
    bool subdivision = true;           // refines Γ*(S) and covers the orthant
    bool admissible = true;
    std::vector<CoordSet> subdivided;  // strict faces of Δ that must stay whole but do not
    std::string reason;
};

inline AdmissibilityReport check_admissible(const Fan& sub, const NewtonPolyhedron& G) {
    const int n = G.n;
    AdmissibilityReport rep;
    // each cone lies in some σ_v
    for (const auto& c : sub.cones) {
        bool inside = false;
        for (const auto& v : G.vertices) {
            bool all = true;
            for (const auto& q : c.gens)
                if (dot(q, v) != G.support_value(q)) all = false;
            if (all) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            rep.subdivision = false;
            rep.reason = "cone does not lie in a cone of the Newton fan";
        }
    }
    // the cones fill the orthant: normalized volumes of simplicial pieces add up to 1
    Rat total = 0;
    for (const auto& c : simplicialize(sub).cones) {
        if (static_cast<int>(c.gens.size()) != n) continue;
        Rat d = abs(det(c.gens));
        for (const auto& q : c.gens) d /= coord_sum(q);
        total += d;
    }
    if (total != 1) {
        rep.subdivision = false;
        rep.reason = "cones do not cover the orthant exactly";
    }
    if (!fan_compatible(sub)) {
        rep.subdivision = false;
        rep.reason = "cones do not meet along common faces";
    }
    // strict faces of Δ with h vanishing inside must be cones of the refinement
    auto cones = all_cones(sub);
    for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
        CoordSet J(m);
        Point bary(n, Rat(0));
        for (int j : J.indices()) bary[j] = 1;
        if (G.support_value(bary) != 0) continue;
        LatticeCone face;
        for (int j : J.indices()) face.gens.push_back(unit_vector(n, j));
        std::sort(face.gens.begin(), face.gens.end());
        if (!std::binary_search(cones.begin(), cones.end(), face)) {
            rep.admissible = false;
            rep.subdivided.push_back(J);
        }
    }
    if (!rep.subdivision) rep.admissible = false;
    return rep;
}

inline bool is_admissible(const Fan& sub, const SupportSet& S) {
    auto rep = check_admissible(sub, gamma_plus(S));
    if (!rep.subdivision) throw PreconditionError("is_admissible: not a subdivision of the Newton fan (" + rep.reason + ")");
    return rep.admissible;
}

// ---------------------------------------------------------------- pyramid subdivision

struct PyramidCheck {
    LatticeCone cone;
    std::vector<Rat> minors;  // d_k: minor of the base generators with column k removed
    Rat det;
};

// cone(e_i, τ') for every τ' of a regular subdivision of the facet of σ_α opposite
// e_i, with the regularity argument replayed: the good-apex relation makes column
// i of the base a combination of the others, so d_i divides every d_k and their
// gcd 1 forces |d_i| = |det| = 1.
inline std::vector<PyramidCheck> pyramid_subdivision(const LatticeCone& sigma_alpha, int i, const Fan& tau_sub,
                                                     const Point& alpha, const Point& beta) {
    const int N = static_cast<int>(alpha.size());
    Point ei = unit_vector(N, i);
    if (!std::binary_search(sigma_alpha.gens.begin(), sigma_alpha.gens.end(), ei))
        throw PreconditionError("pyramid_subdivision: e_" + std::to_string(i + 1) + " is not a generator of the cone");
    std::vector<PyramidCheck> out;
    for (const auto& tau : tau_sub.cones) {
        for (const auto& q : tau.gens)
            if (!cone_contains(sigma_alpha, q)) throw PreconditionError("pyramid_subdivision: base cone leaves σ_α");
        if (!is_regular_cone(tau)) throw PreconditionError("pyramid_subdivision: base cone is not regular");
        PyramidCheck pc;
        std::vector<Point> gens = tau.gens;
        gens.push_back(ei);
        std::sort(gens.begin(), gens.end());
        pc.cone = LatticeCone{gens};
        pc.det = det(gens);
        for (const auto& q : tau.gens) {
            Rat rhs = 0;
            for (int k = 0; k < N; ++k)
                if (k != i) rhs += (alpha[k] - beta[k]) * q[k];
            if (q[i] != rhs)
                throw InternalError("pyramid_subdivision: apex relation fails for generator " + to_string(q) +
                                    "; cone determinant " + to_string(pc.det));
        }
        for (int k = 0; k < N; ++k) {
            Matrix m;
            for (const auto& q : tau.gens) {
                Point r;
                for (int c = 0; c < N; ++c)
                    if (c != k) r.push_back(q[c]);
                m.push_back(r);
            }
            pc.minors.push_back(det(m));
        }
        Int g = 0;
        for (const auto& d : pc.minors) g = gcd(g, Int(d.get_num()));
        if (g != 1) throw InternalError("pyramid_subdivision: base minors have gcd " + g.get_str());
        const Rat& di = pc.minors[i];
        if (di == 0) throw InternalError("pyramid_subdivision: degenerate pyramid");
        for (const auto& d : pc.minors)
            if (!is_integer(d / di)) throw InternalError("pyramid_subdivision: d_i does not divide every minor");
        if (abs(pc.det) != 1)
            throw InternalError("pyramid_subdivision: cone " + to_string(gens[0]) + "... has determinant " + to_string(pc.det));
        out.push_back(std::move(pc));
    }
    return out;
}

}  // namespace nf
