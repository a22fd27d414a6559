#pragma once
// Tools for deformations that may be Newton degenerate: orders of the relative
// Jacobian along monomial arcs, and the support pattern detector for a
// coordinate subspace J.

#include "resolution.hpp"

namespace nf {

// γ(t) = (a_1 t^{r_1}, ..., a_n t^{r_n}, b_1 t^{q_1}, ..., b_m t^{q_m}) + higher order.
struct MonomialArc {
    std::vector<long> r, q;
    std::vector<Rat> a, b;
};

inline MonomialArc make_arc(std::vector<long> r, std::vector<long> q, std::vector<Rat> a = {}, std::vector<Rat> b = {}) {
    if (a.empty()) a.assign(r.size(), Rat(1));
    if (b.empty()) b.assign(q.size(), Rat(1));
    if (a.size() != r.size() || b.size() != q.size()) throw InputError("arc: coefficient count mismatch");
    for (long v : r)
        if (v < 1) throw InputError("arc: orders must be at least 1");
    for (long v : q)
        if (v < 1) throw InputError("arc: orders must be at least 1");
    for (const auto& c : a)
        if (c == 0) throw InputError("arc: leading coefficients must be nonzero");
    for (const auto& c : b)
        if (c == 0) throw InputError("arc: leading coefficients must be nonzero");
    return {std::move(r), std::move(q), std::move(a), std::move(b)};
}

struct ArcOrder {
    long order = 0;
    bool initial_form_vanishes = false;  // then `order` is only a strict lower bound
};

// g in the n + m variables of the family.
inline ArcOrder arc_order(const Poly& g, int n, int m, const MonomialArc& arc) {
    if (g.is_zero()) throw PreconditionError("arc_order: zero polynomial");
    if (static_cast<int>(arc.r.size()) != n || static_cast<int>(arc.q.size()) != m)
        throw InputError("arc_order: arc dimension mismatch");
    std::optional<long> best;
    Rat lead = 0;
    for (const auto& t : g.terms) {
        long o = 0;
        Rat c = t.c;
        for (int j = 0; j < n; ++j) {
            o += arc.r[j] * t.m.e[j];
            for (int p = 0; p < t.m.e[j]; ++p) c *= arc.a[j];
        }
        for (int k = 0; k < m; ++k) {
            o += arc.q[k] * t.m.e[n + k];
            for (int p = 0; p < t.m.e[n + k]; ++p) c *= arc.b[k];
        }
        if (!best || o < *best) {
            best = o;
            lead = c;
        } else if (o == *best) {
            lead += c;
        }
    }
    return {*best, lead == 0};
}

inline ArcOrder arc_order(const DeformationFamily& D, const Poly& g, const MonomialArc& arc) {
    return arc_order(g, D.n, D.m, arc);
}

enum class ArcVerdict { violation, satisfied, indeterminate };

inline const char* to_string(ArcVerdict v) {
    switch (v) {
        case ArcVerdict::violation: return "violation";
        case ArcVerdict::satisfied: return "satisfied";
        default: return "indeterminate";
    }
}

struct ArcComparison {
    int parameter = 0;
    std::optional<ArcOrder> s_order;   // empty: ∂_s F is zero
    std::optional<ArcOrder> x_min;     // smallest lower bound among x-partials; empty if all vanish
    bool x_min_exact = false;          // some partial attains x_min exactly
    ArcVerdict strict = ArcVerdict::indeterminate;  // ord ∂_s F > min ord ∂_x F
    ArcVerdict weak = ArcVerdict::indeterminate;    // ord ∂_s F >= min ord ∂_x F
};

struct ArcReport {
    MonomialArc arc;
    std::vector<ArcComparison> comparisons;
    bool falsified() const {
        return std::any_of(comparisons.begin(), comparisons.end(),
                           [](const ArcComparison& c) { return c.strict == ArcVerdict::violation; });
    }
};

struct FalsifierResult {
    std::vector<ArcReport> arcs;
    bool falsified = false;  // some arc certifies that F is not μ-constant
    int indeterminate = 0;
    std::string note = "monomial arcs only: a violation disproves mu-constancy, its absence proves nothing";
};

namespace detail {

// Compare the true orders A (of ∂_s F) and B (min over ∂_x F) given lower bounds.
// A is known in [a, ∞) or exactly a; B likewise with b.
inline ArcVerdict compare_orders(long a, bool a_exact, long b, bool b_exact, bool strict) {
    // violation of A > B means A <= B; of A >= B means A < B
    if (strict) {
        if (a_exact && a <= b) return ArcVerdict::violation;
        if (b_exact && (a_exact ? a > b : a >= b)) return ArcVerdict::satisfied;
    } else {
        if (a_exact && a < b) return ArcVerdict::violation;
        if (b_exact && (a_exact ? a >= b : a + 1 >= b)) return ArcVerdict::satisfied;
    }
    return ArcVerdict::indeterminate;
}

}  // namespace detail

inline ArcReport evaluate_arc(const DeformationFamily& D, const MonomialArc& arc) {
    ArcReport rep{arc, {}};
    std::vector<Poly> dx = relative_jacobian(D);
    std::optional<long> bmin;
    bool bexact = false;
    for (const auto& p : dx) {
        if (p.is_zero()) continue;
        ArcOrder o = arc_order(D, p, arc);
        if (!bmin || o.order < *bmin) {
            bmin = o.order;
            bexact = !o.initial_form_vanishes;
        } else if (o.order == *bmin && !o.initial_form_vanishes) {
            bexact = true;
        }
    }
    std::vector<Poly> ds = parameter_partials(D);
    for (int i = 0; i < D.m; ++i) {
        ArcComparison c;
        c.parameter = i;
        if (bmin) {
            c.x_min = ArcOrder{*bmin, !bexact};
            c.x_min_exact = bexact;
        }
        if (ds[i].is_zero()) {
            c.strict = c.weak = ArcVerdict::satisfied;  // infinite order
        } else {
            c.s_order = arc_order(D, ds[i], arc);
            const bool aexact = !c.s_order->initial_form_vanishes;
            if (!bmin) {
                // every x-partial vanishes identically: infinite order on the right
                c.strict = c.weak = aexact ? ArcVerdict::violation : ArcVerdict::indeterminate;
            } else {
                c.strict = detail::compare_orders(c.s_order->order, aexact, *bmin, bexact, true);
                c.weak = detail::compare_orders(c.s_order->order, aexact, *bmin, bexact, false);
            }
        }
        rep.comparisons.push_back(c);
    }
    return rep;
}

inline FalsifierResult valuative_falsifier(const DeformationFamily& D, const std::vector<MonomialArc>& arcs,
                                           int threads = 1) {
    FalsifierResult r;
    r.arcs.resize(arcs.size());
    parallel_for(arcs.size(), threads, [&](std::size_t k) { r.arcs[k] = evaluate_arc(D, arcs[k]); });
    for (const auto& a : r.arcs) {
        if (a.falsified()) r.falsified = true;
        for (const auto& c : a.comparisons)
            if (c.strict == ArcVerdict::indeterminate) ++r.indeterminate;
    }
    return r;
}

// All arcs with x-orders in [lo, hi]^n and the given s-orders, unit coefficients.
inline std::vector<MonomialArc> arc_grid(int n, long lo, long hi, const std::vector<long>& q) {
    std::vector<MonomialArc> out;
    std::vector<long> r(n, lo);
    while (true) {
        out.push_back(make_arc(r, q));
        int k = n - 1;
        while (k >= 0 && r[k] == hi) r[k--] = lo;
        if (k < 0) break;
        ++r[k];
    }
    return out;
}

// ---------------------------------------------------------------- support pattern on J^c

inline DeformationFamily restrict_family(const DeformationFamily& D, CoordSet J) {
    std::vector<int> keep = J.indices();
    std::vector<std::pair<std::vector<int>, Rat>> ts;
    for (const auto& t : D.F.terms) {
        bool inside = true;
        for (int j = 0; j < D.n; ++j)
            if (!J.contains(j) && t.m.e[j]) inside = false;
        if (!inside) continue;
        std::vector<int> e;
        for (int j : keep) e.push_back(t.m.e[j]);
        for (int k = 0; k < D.m; ++k) e.push_back(t.m.e[D.n + k]);
        ts.emplace_back(std::move(e), t.c);
    }
    std::vector<std::string> xn;
    for (int j : keep) xn.push_back(D.x_names[j]);
    return make_family(static_cast<int>(keep.size()), D.m, Poly::from_terms(static_cast<int>(keep.size()) + D.m, ts), xn,
                       D.s_names);
}

struct RestrictionAnalysis {
    std::optional<DeformationFamily> family;  // empty if f vanishes on R^J
    std::optional<bool> apex_verdict;  // when the restricted supports are convenient
    std::string note;
};

struct B1dResult {
    bool found = false;
    int axis = -1;
    Point beta;
    bool beta_in_base = false;
    Point witness;    // a point of supp F_s \ supp f inside R^J
    CoordSet witness_support;
    std::optional<RestrictionAnalysis> restriction;
};

inline B1dResult b1d_detector(const DeformationFamily& D, CoordSet J) {
    const int n = D.n;
    if (J.empty()) throw PreconditionError("b1d: J is empty");
    for (int j : J.indices())
        if (j >= n) throw InputError("b1d: J has an index beyond the variable count");
    if (J == CoordSet::full(n)) throw PreconditionError("b1d: J must be a proper subset of the coordinates");
    SupportSet S = base_support(D), Sp = generic_support(D);
    B1dResult r;
    bool witnessed = false;
    for (const auto& p : Sp.points) {
        if (std::binary_search(S.points.begin(), S.points.end(), p)) continue;
        CoordSet I = support(p);
        if (I.subset_of(J)) {
            r.witness = p;
            r.witness_support = I;
            witnessed = true;
            break;
        }
    }
    if (!witnessed) throw PreconditionError("b1d: no new support point lies in R^J (hypothesis fails)");
    for (int i : J.complement(n).indices()) {
        for (const auto& p : Sp.points) {
            bool ok = true;
            for (int j : J.complement(n).indices())
                if (p[j] != (j == i ? 1 : 0)) ok = false;
            if (!ok) continue;
            r.found = true;
            r.axis = i;
            r.beta = p;
            r.beta_in_base = std::binary_search(S.points.begin(), S.points.end(), p);
            return r;
        }
    }
    RestrictionAnalysis ra;
    try {
        ra.family = restrict_family(D, J);
        SupportSet s0 = base_support(*ra.family), s1 = generic_support(*ra.family);
        if (is_convenient(s0) && is_convenient(s1)) {
            ra.apex_verdict = mu_constant_test(s0, s1).verdict;
            ra.note = "apex test on the restriction; conclusive only if the restriction is non-degenerate";
        } else {
            ra.note = "restriction is not convenient; no tester applies";
        }
    } catch (const std::exception& e) {
        ra.note = std::string("restriction analysis failed: ") + e.what();
    }
    r.restriction = std::move(ra);
    return r;
}

}  // namespace nf
