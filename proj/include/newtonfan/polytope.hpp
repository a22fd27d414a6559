#pragma once
// Exact convex hulls with full face lattice, volumes, pulling triangulations and clipping.
//
// Hull construction is facet-to-facet gift wrapping: starting from one
// supporting hyperplane, every ridge is rotated about until it meets the next
// point set.  Ridges come from the recursive hull of each facet, so the same
// pass yields the whole face lattice.  Lower-dimensional inputs are handled by
// projecting onto pivot coordinates of their affine hull.

#include "rational.hpp"

#include <map>
#include <set>
#include <tuple>

namespace nf {

// a.x - b, read as the inequality a.x - b >= 0
struct AffineFn {
    Point a;
    Rat b;
    Rat operator()(const Point& x) const { return dot(a, x) - b; }
};

// normal.x >= offset (facets) or normal.x == offset (equations); normal primitive integer
struct Halfspace {
    Point normal;
    Rat offset;
    friend bool operator<(const Halfspace& x, const Halfspace& y) {
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    }
    friend bool operator==(const Halfspace& x, const Halfspace& y) {
        return x.normal == y.normal && x.offset == y.offset;
    }
};

struct Face {
    std::vector<int> vertices;  // sorted indices into ConvexPolytope::vertices
    int dim = 0;
    std::vector<int> facets;  // indices into ConvexPolytope::faces of its own facets
};

struct ConvexPolytope {
    int ambient_dim = 0;
    int dim = -1;                  // -1 for the empty set
    std::vector<Point> vertices;   // lexicographically sorted
    std::vector<Halfspace> facets; // sorted; valid on the affine hull
    std::vector<std::vector<int>> facet_vertices;
    std::vector<Halfspace> equations;  // affine hull
    std::vector<Face> faces;       // every nonempty face, the polytope itself last
    std::vector<int> chart_cols;   // coordinates giving an injective projection of the affine hull

    bool empty() const { return dim < 0; }
    bool contains(const Point& x) const {
        if (empty()) return false;
        for (const auto& e : equations)
            if (dot(e.normal, x) != e.offset) return false;
        for (const auto& h : facets)
            if (dot(h.normal, x) < h.offset) return false;
        return true;
    }
    std::vector<std::vector<int>> faces_of_dim(int d) const {
        std::vector<std::vector<int>> r;
        for (const auto& f : faces)
            if (f.dim == d) r.push_back(f.vertices);
        return r;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> r;
        for (const auto& f : faces)
            if (f.dim == 1) r.emplace_back(f.vertices[0], f.vertices[1]);
        std::sort(r.begin(), r.end());
        return r;
    }
};

namespace detail {

inline AffineFn normalize(AffineFn h) {
    Rat f;
    Point a = clear_denominators(h.a, &f);
    return {a, h.b * f};
}

inline bool proportional(const AffineFn& g, const AffineFn& h) {
    Matrix m{g.a, h.a};
    m[0].push_back(g.b);
    m[1].push_back(h.b);
    return rank(m) < 2;
}

// Affine functions vanishing on the given points (coordinates of dimension m).
inline std::vector<AffineFn> vanishing_fns(const std::vector<Point>& pts, int m) {
    Matrix rows;
    for (const auto& p : pts) {
        Point r = p;
        r.push_back(Rat(-1));
        rows.push_back(std::move(r));
    }
    Matrix ns = nullspace(rows, m + 1);
    std::vector<AffineFn> out;
    for (auto& v : ns) {
        AffineFn g;
        g.b = v[m];
        v.pop_back();
        g.a = std::move(v);
        out.push_back(std::move(g));
    }
    return out;
}

class HullBuilder {
public:
    explicit HullBuilder(std::vector<Point> pts) : pts_(std::move(pts)) {}

    struct Node {
        int dim = 0;
        std::vector<int> cols;                 // projection columns
        std::vector<std::vector<int>> facets;  // point index sets
        std::vector<AffineFn> fns;             // facet functions in projected coordinates
    };

    const Node& node(const std::vector<int>& set) {
        auto it = memo_.find(set);
        if (it != memo_.end()) return it->second;
        Node nd = build(set);
        return memo_.emplace(set, std::move(nd)).first->second;
    }

    const std::vector<Point>& points() const { return pts_; }

    // All faces reachable from `top`, keyed by point set.
    void collect(const std::vector<int>& top, std::map<std::vector<int>, int>& dims) {
        if (dims.count(top)) return;
        const Node& nd = node(top);
        dims[top] = nd.dim;
        auto facets = nd.facets;  // copy: node() may rehash
        for (const auto& f : facets) collect(f, dims);
    }

private:
    std::vector<Point> pts_;
    std::map<std::vector<int>, Node> memo_;

    std::vector<Point> project(const std::vector<int>& set, std::vector<int>& cols, int& dim) const {
        const Point& p0 = pts_[set[0]];
        Matrix d;
        for (std::size_t i = 1; i < set.size(); ++i) d.push_back(sub(pts_[set[i]], p0));
        Echelon e = rref(d);
        cols = e.pivots;
        dim = e.rank();
        std::vector<Point> out;
        out.reserve(set.size());
        for (int i : set) out.push_back(take(pts_[i], cols));
        return out;
    }

    Node build(const std::vector<int>& set) {
        Node nd;
        std::vector<Point> y = project(set, nd.cols, nd.dim);
        const int m = nd.dim;
        const int npts = static_cast<int>(set.size());
        if (m == 0) return nd;
        if (m == 1) {
            int lo = 0, hi = 0;
            for (int j = 1; j < npts; ++j) {
                if (y[j][0] < y[lo][0]) lo = j;
                if (y[j][0] > y[hi][0]) hi = j;
            }
            nd.facets = {{set[lo]}, {set[hi]}};
            nd.fns = {AffineFn{{Rat(1)}, y[lo][0]}, AffineFn{{Rat(-1)}, -y[hi][0]}};
            return nd;
        }

        auto zero_set = [&](const AffineFn& h) {
            std::vector<int> z;
            for (int j = 0; j < npts; ++j)
                if (h(y[j]) == 0) z.push_back(j);
            return z;
        };
        auto rotate = [&](const AffineFn& h, const AffineFn& g) {
            bool have = false;
            Rat t;
            for (int j = 0; j < npts; ++j) {
                Rat hv = h(y[j]);
                if (hv <= 0) continue;
                Rat r = g(y[j]) / hv;
                if (!have || r < t) {
                    t = r;
                    have = true;
                }
            }
            if (!have) throw InternalError("hull: rotation without off-facet points");
            AffineFn out{sub(g.a, scale(h.a, t)), g.b - t * h.b};
            return normalize(out);
        };
        auto pts_of = [&](const std::vector<int>& local) {
            std::vector<Point> r;
            for (int j : local) r.push_back(y[j]);
            return r;
        };

        // initial facet: grow a supporting hyperplane until its contact set has dimension m-1
        Rat lo = y[0][0];
        for (const auto& p : y) lo = std::min(lo, p[0]);
        Point a0(m, Rat(0));
        a0[0] = 1;
        AffineFn h{a0, lo};
        for (;;) {
            auto z = zero_set(h);
            if (affine_dim(pts_of(z)) == m - 1) break;
            auto cands = vanishing_fns(pts_of(z), m);
            const AffineFn* g = nullptr;
            for (const auto& c : cands)
                if (!proportional(c, h)) {
                    g = &c;
                    break;
                }
            if (!g) throw InternalError("hull: no rotation direction");
            h = rotate(h, *g);
        }

        std::map<std::vector<int>, AffineFn> found;  // local zero set -> function
        std::vector<std::vector<int>> queue;
        auto z0 = zero_set(h);
        found.emplace(z0, h);
        queue.push_back(z0);
        while (!queue.empty()) {
            std::vector<int> zl = queue.back();
            queue.pop_back();
            AffineFn hf = found.at(zl);
            std::vector<int> global;
            for (int j : zl) global.push_back(set[j]);
            std::vector<std::vector<int>> ridges = node(global).facets;
            // map global -> local positions
            std::map<int, int> loc;
            for (int j = 0; j < npts; ++j) loc[set[j]] = j;
            for (const auto& r : ridges) {
                std::vector<int> rl;
                for (int gidx : r) rl.push_back(loc.at(gidx));
                auto cands = vanishing_fns(pts_of(rl), m);
                const AffineFn* g = nullptr;
                for (const auto& c : cands)
                    if (!proportional(c, hf)) {
                        g = &c;
                        break;
                    }
                if (!g) throw InternalError("hull: degenerate ridge");
                AffineFn gg = *g;
                // orient g to be nonnegative on the current facet
                for (int j : zl) {
                    Rat v = gg(y[j]);
                    if (v == 0) continue;
                    if (v < 0) gg = AffineFn{scale(gg.a, Rat(-1)), -gg.b};
                    break;
                }
                AffineFn nh = rotate(hf, gg);
                auto nz = zero_set(nh);
                if (!found.count(nz)) {
                    found.emplace(nz, nh);
                    queue.push_back(nz);
                }
            }
        }
        for (const auto& [zl, fn] : found) {
            std::vector<int> global;
            for (int j : zl) global.push_back(set[j]);
            nd.facets.push_back(std::move(global));
            nd.fns.push_back(fn);
        }
        return nd;
    }
};

}  // namespace detail

inline ConvexPolytope convex_hull(std::vector<Point> input) {
    ConvexPolytope P;
    if (input.empty()) return P;
    const int n = static_cast<int>(input[0].size());
    if (n > kMaxDim)
        throw PreconditionError("unsupported dimension " + std::to_string(n) + " (cap " +
                                std::to_string(kMaxDim) + ")");
    for (const auto& p : input)
        if (static_cast<int>(p.size()) != n) throw InputError("convex_hull: mixed point dimensions");
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());
    P.ambient_dim = n;

    detail::HullBuilder hb(input);
    std::vector<int> all(input.size());
    std::iota(all.begin(), all.end(), 0);
    std::map<std::vector<int>, int> dims;
    hb.collect(all, dims);
    const auto& top = hb.node(all);
    P.dim = top.dim;
    P.chart_cols = top.cols;

    // vertices: 0-dimensional faces (the single point when dim == 0)
    std::vector<int> vert_ids;
    for (const auto& [set, d] : dims)
        if (d == 0) vert_ids.push_back(set[0]);
    std::sort(vert_ids.begin(), vert_ids.end());
    std::map<int, int> vpos;
    for (int id : vert_ids) {
        vpos[id] = static_cast<int>(P.vertices.size());
        P.vertices.push_back(input[id]);
    }
    auto to_vertex_set = [&](const std::vector<int>& set) {
        std::vector<int> r;
        for (int id : set) {
            auto it = vpos.find(id);
            if (it != vpos.end()) r.push_back(it->second);
        }
        return r;
    };

    // faces ordered by (dim, vertex set), polytope itself last
    std::vector<std::pair<int, std::vector<int>>> order;
    std::map<std::vector<int>, std::vector<int>> by_vs;  // vertex set -> point set
    for (const auto& [set, d] : dims) {
        auto vs = to_vertex_set(set);
        order.emplace_back(d, vs);
        by_vs[vs] = set;
    }
    std::sort(order.begin(), order.end());
    std::map<std::vector<int>, int> index;
    for (const auto& [d, vs] : order) {
        index[vs] = static_cast<int>(P.faces.size());
        P.faces.push_back(Face{vs, d, {}});
    }
    for (auto& f : P.faces) {
        const auto& nd = hb.node(by_vs.at(f.vertices));
        for (const auto& fs : nd.facets) f.facets.push_back(index.at(to_vertex_set(fs)));
        std::sort(f.facets.begin(), f.facets.end());
    }

    // H-rep: lift facet functions from projected coordinates
    std::vector<std::pair<Halfspace, std::vector<int>>> hs;
    for (std::size_t k = 0; k < top.facets.size(); ++k) {
        Point a(n, Rat(0));
        for (std::size_t c = 0; c < top.cols.size(); ++c) a[top.cols[c]] = top.fns[k].a[c];
        hs.push_back({Halfspace{a, top.fns[k].b}, to_vertex_set(top.facets[k])});
    }
    std::sort(hs.begin(), hs.end());
    for (auto& [h, vs] : hs) {
        P.facets.push_back(h);
        P.facet_vertices.push_back(vs);
    }

    // affine hull equations
    Matrix diffs;
    for (std::size_t i = 1; i < input.size(); ++i) diffs.push_back(sub(input[i], input[0]));
    Matrix normals = diffs.empty() ? Matrix{} : nullspace(diffs, n);
    if (diffs.empty())
        for (int i = 0; i < n; ++i) normals.push_back(unit_vector(n, i));
    for (auto& w : normals) {
        Point p = clear_denominators(w);
        P.equations.push_back(Halfspace{p, dot(p, input[0])});
    }
    std::sort(P.equations.begin(), P.equations.end());
    return P;
}

// Pulling triangulation: recursively cone the lexicographically first vertex of
// each face over the triangulations of the facets that avoid it.
inline std::vector<std::vector<int>> triangulate(const ConvexPolytope& P) {
    if (P.empty()) return {};
    std::map<int, std::vector<std::vector<int>>> memo;
    std::function<const std::vector<std::vector<int>>&(int)> tri = [&](int fi) -> const std::vector<std::vector<int>>& {
        auto it = memo.find(fi);
        if (it != memo.end()) return it->second;
        const Face& f = P.faces[fi];
        std::vector<std::vector<int>> out;
        if (f.dim == 0) {
            out.push_back(f.vertices);
        } else {
            int v0 = f.vertices.front();
            for (int g : f.facets) {
                const Face& gf = P.faces[g];
                if (std::binary_search(gf.vertices.begin(), gf.vertices.end(), v0)) continue;
                for (auto s : tri(g)) {
                    s.insert(s.begin(), v0);
                    out.push_back(std::move(s));
                }
            }
        }
        return memo.emplace(fi, std::move(out)).first->second;
    };
    auto out = tri(static_cast<int>(P.faces.size()) - 1);
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

// k-volume of a k-simplex measured in the given coordinates.
inline Rat simplex_volume(const std::vector<Point>& verts, const std::vector<int>& cols) {
    const int k = static_cast<int>(verts.size()) - 1;
    if (k <= 0) return k == 0 ? Rat(1) : Rat(0);
    if (static_cast<int>(cols.size()) != k) throw InternalError("simplex_volume: column count");
    Matrix m;
    for (int i = 1; i <= k; ++i) m.push_back(take(sub(verts[i], verts[0]), cols));
    Rat d = det(m);
    if (d < 0) d = -d;
    return d / Rat(factorial(k));
}

// Intrinsic volume. For a polytope whose affine hull is parallel to a coordinate
// subspace this is the Euclidean volume; otherwise it is measured in the
// coordinates of chart_cols.  A point has volume 1 (0-dim counting measure).
inline Rat polytope_volume(const ConvexPolytope& P) {
    if (P.empty()) return 0;
    if (P.dim == 0) return 1;
    Rat v = 0;
    for (const auto& s : triangulate(P)) {
        std::vector<Point> vs;
        for (int i : s) vs.push_back(P.vertices[i]);
        v += simplex_volume(vs, P.chart_cols);
    }
    return v;
}

// P intersected with a closed halfspace.
inline ConvexPolytope clip(const ConvexPolytope& P, const Halfspace& h) {
    if (P.empty()) return P;
    std::vector<Point> keep;
    std::vector<Rat> val(P.vertices.size());
    bool all_in = true;
    for (std::size_t i = 0; i < P.vertices.size(); ++i) {
        val[i] = dot(h.normal, P.vertices[i]) - h.offset;
        if (val[i] >= 0)
            keep.push_back(P.vertices[i]);
        else
            all_in = false;
    }
    if (all_in) return P;
    for (const auto& [i, j] : P.edges()) {
        if ((val[i] < 0 && val[j] > 0) || (val[i] > 0 && val[j] < 0)) {
            Rat t = val[i] / (val[i] - val[j]);
            keep.push_back(add(P.vertices[i], scale(sub(P.vertices[j], P.vertices[i]), t)));
        }
    }
    if (keep.empty()) {
        ConvexPolytope e;
        e.ambient_dim = P.ambient_dim;
        return e;
    }
    return convex_hull(keep);
}

inline ConvexPolytope intersect(const ConvexPolytope& P, const ConvexPolytope& Q) {
    ConvexPolytope R = P;
    for (const auto& e : Q.equations) {
        R = clip(R, e);
        R = clip(R, Halfspace{scale(e.normal, Rat(-1)), -e.offset});
    }
    for (const auto& h : Q.facets) R = clip(R, h);
    return R;
}

}  // namespace nf
