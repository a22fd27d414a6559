#pragma once
// Deformation families F(x, s), monomial charts of a regular fan, and the
// chart-by-chart certificate of a simultaneous embedded resolution.

#include "fan.hpp"
#include "nondegeneracy.hpp"
#include "parallel.hpp"

namespace nf {

// F as one polynomial in n + m variables: x_1..x_n, then s_1..s_m.
struct DeformationFamily {
    int n = 0;
    int m = 0;
    std::vector<std::string> x_names, s_names;
    Poly F;

    std::vector<std::string> names() const {
        auto v = x_names;
        v.insert(v.end(), s_names.begin(), s_names.end());
        return v;
    }
};

inline std::vector<int> x_part(const Mono& mo, int n) { return std::vector<int>(mo.e.begin(), mo.e.begin() + n); }

inline bool s_free(const Mono& mo, int n, int m) {
    for (int k = n; k < n + m; ++k)
        if (mo.e[k]) return false;
    return true;
}

inline DeformationFamily make_family(int n, int m, const Poly& F, std::vector<std::string> xn = {},
                                     std::vector<std::string> sn = {}) {
    if (n < 1) throw InputError("family: need at least one variable");
    if (n + m > kMaxVars) throw PreconditionError("family: too many variables");
    if (xn.empty())
        for (int i = 0; i < n; ++i) xn.push_back("x" + std::to_string(i + 1));
    if (sn.empty())
        for (int i = 0; i < m; ++i) sn.push_back("s" + std::to_string(i + 1));
    if (static_cast<int>(xn.size()) != n || static_cast<int>(sn.size()) != m)
        throw InputError("family: name count mismatch");
    DeformationFamily D{n, m, std::move(xn), std::move(sn), F};
    D.F.nvars = n + m;
    bool base = false;
    for (const auto& t : F.terms) {
        bool x0 = true;
        for (int i = 0; i < n; ++i)
            if (t.m.e[i]) x0 = false;
        if (x0 && !s_free(t.m, n, m))
            throw InputError("family: a parameter term has no x factor (g_i(0) must vanish)");
        if (s_free(t.m, n, m)) base = true;
    }
    if (!base) throw InputError("family: f = F(x, 0) is zero");
    return D;
}

// f = F(x, 0) as a polynomial in the n x-variables.
inline Poly base_polynomial(const DeformationFamily& D) {
    Poly f(D.n);
    for (const auto& t : D.F.terms)
        if (s_free(t.m, D.n, D.m)) f.terms.push_back(t);
    return f;
}

inline SupportSet support_of(const Poly& f, int n) {
    std::set<Point> pts;
    for (const auto& t : f.terms) {
        Point p;
        for (int i = 0; i < n; ++i) p.push_back(Rat(t.m.e[i]));
        if (!is_zero(p)) pts.insert(p);
    }
    return make_support(n, {pts.begin(), pts.end()});
}

inline SupportSet base_support(const DeformationFamily& D) { return support_of(base_polynomial(D), D.n); }

// supp F_s: x-exponents with a coefficient that is not the zero polynomial in s.
inline SupportSet generic_support(const DeformationFamily& D) { return support_of(D.F, D.n); }

inline std::vector<Poly> relative_jacobian(const DeformationFamily& D) {
    std::vector<Poly> r;
    for (int i = 0; i < D.n; ++i) r.push_back(D.F.derivative(i));
    return r;
}

inline std::vector<Poly> parameter_partials(const DeformationFamily& D) {
    std::vector<Poly> r;
    for (int k = 0; k < D.m; ++k) r.push_back(D.F.derivative(D.n + k));
    return r;
}

// ---------------------------------------------------------------- charts

struct Chart {
    std::vector<Point> gens;  // q_1..q_n in chart order; x_j = Π_k y_k^{q_kj}
};

struct TotalTransform {
    std::vector<long> m;  // exponent of y_k in the monomial factor
    Poly Fbar;            // strict part, in y_1..y_n, s_1..s_m
};

inline TotalTransform chart_pullback(const DeformationFamily& D, const Chart& ch) {
    const int n = D.n;
    if (static_cast<int>(ch.gens.size()) != n) throw PreconditionError("chart_pullback: need n generators");
    for (const auto& q : ch.gens)
        if (!is_integral(q) || !is_nonnegative(q)) throw PreconditionError("chart_pullback: generators must be in the orthant lattice");
    if (abs(det(ch.gens)) != 1) throw PreconditionError("chart_pullback: cone is not regular");
    TotalTransform T;
    T.m.assign(n, -1);
    std::vector<std::pair<std::vector<long>, const Term*>> pulled;
    for (const auto& t : D.F.terms) {
        std::vector<long> y(n);
        for (int k = 0; k < n; ++k) {
            long v = 0;
            for (int j = 0; j < n; ++j) v += ch.gens[k][j].get_num().get_si() * t.m.e[j];
            y[k] = v;
            if (T.m[k] < 0 || v < T.m[k]) T.m[k] = v;
        }
        pulled.emplace_back(std::move(y), &t);
    }
    std::vector<std::pair<std::vector<int>, Rat>> ts;
    for (const auto& [y, t] : pulled) {
        std::vector<int> e(n + D.m);
        for (int k = 0; k < n; ++k) e[k] = static_cast<int>(y[k] - T.m[k]);
        for (int k = 0; k < D.m; ++k) e[n + k] = t->m.e[n + k];
        ts.emplace_back(std::move(e), t->c);
    }
    T.Fbar = Poly::from_terms(n + D.m, ts);
    return T;
}

// Coefficient (a polynomial in s) of the y-monomial e in F̄.
inline Poly y_coefficient(const Poly& Fbar, int n, int m, const std::vector<int>& e) {
    Poly c(m);
    for (const auto& t : Fbar.terms) {
        bool match = true;
        for (int k = 0; k < n; ++k)
            if (t.m.e[k] != e[k]) match = false;
        if (!match) continue;
        Mono s;
        for (int k = 0; k < m; ++k) {
            s.e[k] = t.m.e[n + k];
            s.deg += s.e[k];
        }
        c.terms.push_back({s, t.c});
    }
    return c;
}

// F̄(y, 0) in the n chart variables.
inline Poly at_parameter_zero(const Poly& Fbar, int n, int m) {
    Poly r(n);
    for (const auto& t : Fbar.terms)
        if (s_free(t.m, n, m)) r.terms.push_back(t);
    return r;
}

enum class ChartStatus { unit, smooth_verified, unchecked, failed };

inline const char* to_string(ChartStatus s) {
    switch (s) {
        case ChartStatus::unit: return "unit";
        case ChartStatus::smooth_verified: return "smooth-verified";
        case ChartStatus::unchecked: return "unchecked";
        default: return "failed";
    }
}

struct SmoothnessCheck {
    bool performed = false;
    bool smooth = false;
    int strata = 0;  // subsets K of exceptional coordinates examined
    std::string note;
};

// For every set K of exceptional coordinates (m_k > 0), the strict transform at
// s = 0 restricted to {y_K = 0} is smooth over the origin: 1 lies in the ideal of
// F̄, its partials in the free coordinates and the pulled-back x_j, all restricted.
inline SmoothnessCheck smoothness_check(const Poly& F0, const Chart& ch, const std::vector<long>& m,
                                        std::size_t max_terms = 30, int max_vars = 4, long budget = 200000) {
    const int n = F0.nvars;
    SmoothnessCheck sc;
    if (F0.terms.size() > max_terms || n > max_vars) {
        sc.note = "exceeds smoothness cap";
        return sc;
    }
    std::vector<int> M;
    for (int k = 0; k < n; ++k)
        if (m[k] > 0) M.push_back(k);
    sc.performed = true;
    sc.smooth = true;
    for (std::uint32_t mask = 0; mask < (1u << M.size()); ++mask) {
        std::vector<bool> zero(n, false);
        for (std::size_t b = 0; b < M.size(); ++b)
            if ((mask >> b) & 1u) zero[M[b]] = true;
        Poly g = F0;
        for (int k = 0; k < n; ++k)
            if (zero[k]) g = g.at_zero(k);
        std::vector<Poly> gens{g};
        for (int k = 0; k < n; ++k)
            if (!zero[k]) gens.push_back(g.derivative(k));
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(n);
            bool vanishes = false;
            for (int k = 0; k < n; ++k) {
                e[k] = static_cast<int>(ch.gens[k][j].get_num().get_si());
                if (zero[k] && e[k] > 0) vanishes = true;
            }
            if (!vanishes) gens.push_back(Poly::monomial(n, e));
        }
        ++sc.strata;
        try {
            if (!contains_one(groebner_basis(gens, budget))) {
                sc.smooth = false;
                sc.note = "singular point on stratum " + std::to_string(mask);
                return sc;
            }
        } catch (const BudgetExceeded&) {
            sc.performed = false;
            sc.smooth = false;
            sc.note = "groebner budget exceeded";
            return sc;
        }
    }
    return sc;
}

struct ChartCertificate {
    Chart chart;
    TotalTransform transform;
    ChartStatus status = ChartStatus::unchecked;
    std::optional<Point> verd_vertex;  // set for charts inside σ_α, α ∈ Verd
    int apex_axis = -1;
    bool normal_form = false;          // c₀(0) = 0, c₀ ≠ 0, c₁(0) ≠ 0
    SmoothnessCheck smoothness;
};

struct ResolutionOptions {
    bool skip_smoothness = false;
    long budget = 200000;
    std::size_t max_terms = 30;
    int max_vars = 4;
    NondegMode nondeg_mode = NondegMode::exact_low_dim;
    int threads = 1;
};

struct ResolutionResult {
    Fan fan;
    std::vector<ChartCertificate> charts;
    MuConstantResult mu;
    NondegReport nondeg;
    std::vector<std::string> warnings;
    int count(ChartStatus s) const {
        return static_cast<int>(std::count_if(charts.begin(), charts.end(), [&](const ChartCertificate& c) { return c.status == s; }));
    }
};

inline Rat eval_at_zero(const Poly& c) { return c.constant_term(); }

inline ResolutionResult simultaneous_resolution(const DeformationFamily& D, const ResolutionOptions& opt = {}) {
    const int n = D.n;
    ResolutionResult R;
    SupportSet S = base_support(D);
    if (!is_convenient(S)) throw PreconditionError("resolve: f(x, 0) is not convenient");
    SupportSet Sp = generic_support(D);
    R.mu = mu_constant_test(S, Sp);
    for (std::size_t k = 0; k < R.mu.verd.size(); ++k)
        if (!R.mu.certificates[k] || !R.mu.certificates[k]->good)
            throw PreconditionError("resolve: not mu-constant, vertex " + to_string(R.mu.verd[k]) + " has no good apex");
    R.nondeg = nondegeneracy_check(base_polynomial(D), opt.nondeg_mode, opt.budget);
    if (R.nondeg.any_degenerate()) throw PreconditionError("resolve: f is Newton degenerate");
    if (!R.nondeg.nondegenerate()) R.warnings.push_back("some faces of f were not checked for non-degeneracy");

    NewtonPolyhedron Gp = gamma_plus(Sp);
    std::vector<Point> apex_axes;
    for (const auto& c : R.mu.certificates) {
        Point e = unit_vector(n, c->axis);
        if (std::find(apex_axes.begin(), apex_axes.end(), e) == apex_axes.end()) apex_axes.push_back(e);
    }
    Fan F = regularize_fan(simplicialize(newton_fan(Gp), apex_axes));
    for (const auto& c : F.cones)
        if (abs(det(c.gens)) != 1) throw InternalError("resolve: non-regular cone after refinement");
    auto adm = check_admissible(F, Gp);
    if (!adm.admissible) throw InternalError("resolve: refinement is not admissible (" + adm.reason + ")");
    R.fan = F;

    auto inside = [&](const LatticeCone& c, const Point& v) {
        for (const auto& q : c.gens)
            if (dot(q, v) != Gp.support_value(q)) return false;
        return true;
    };
    // pyramid structure over every σ_α
    for (const auto& cert : R.mu.certificates) {
        Point ei = unit_vector(n, cert->axis);
        Fan bases{n, {}};
        for (const auto& c : F.cones) {
            if (!inside(c, cert->alpha)) continue;
            if (!std::binary_search(c.gens.begin(), c.gens.end(), ei))
                throw InternalError("resolve: cone in σ_α misses the apex axis");
            LatticeCone b;
            for (const auto& q : c.gens)
                if (q != ei) b.gens.push_back(q);
            bases.cones.push_back(b);
        }
        pyramid_subdivision(newton_cone_at(Gp, cert->alpha), cert->axis, bases, cert->alpha, cert->beta);
    }

    R.charts.resize(F.cones.size());
    parallel_for(F.cones.size(), opt.threads, [&](std::size_t idx) {
        const LatticeCone& c = F.cones[idx];
        ChartCertificate& cc = R.charts[idx];
        std::vector<Point> gens = c.gens;
        for (const auto& cert : R.mu.certificates)
            if (inside(c, cert->alpha)) {
                cc.verd_vertex = cert->alpha;
                cc.apex_axis = cert->axis;
                Point ei = unit_vector(n, cert->axis);
                gens.erase(std::find(gens.begin(), gens.end(), ei));
                gens.push_back(ei);
            }
        cc.chart.gens = gens;
        cc.transform = chart_pullback(D, cc.chart);
        for (int k = 0; k < n; ++k)
            if (Rat(cc.transform.m[k]) != Gp.support_value(gens[k]))
                throw InternalError("resolve: monomial exponent differs from the support function");
        const Poly& Fb = cc.transform.Fbar;
        Poly c0 = y_coefficient(Fb, n, D.m, std::vector<int>(n, 0));
        bool unit = eval_at_zero(c0) != 0;
        if (cc.verd_vertex) {
            std::vector<int> e(n, 0);
            e[n - 1] = 1;
            Poly c1 = y_coefficient(Fb, n, D.m, e);
            cc.normal_form = !c0.is_zero() && eval_at_zero(c0) == 0 && eval_at_zero(c1) != 0;
        }
        if (!opt.skip_smoothness)
            cc.smoothness = smoothness_check(at_parameter_zero(Fb, n, D.m), cc.chart, cc.transform.m, opt.max_terms,
                                             opt.max_vars, opt.budget);
        if (cc.smoothness.performed && !cc.smoothness.smooth) cc.status = ChartStatus::failed;
        else if (cc.verd_vertex)
            cc.status = cc.normal_form && cc.smoothness.performed ? ChartStatus::smooth_verified
                        : cc.normal_form                          ? ChartStatus::unchecked
                                                                  : ChartStatus::failed;
        else if (unit) cc.status = ChartStatus::unit;
        else cc.status = cc.smoothness.performed ? ChartStatus::smooth_verified : ChartStatus::unchecked;
    });
    if (R.count(ChartStatus::failed) > 0) R.warnings.push_back("some charts failed certification");
    return R;
}

}  // namespace nf
