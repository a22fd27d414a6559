#pragma once
// Buchberger's algorithm over Q (grevlex, sugar selection) and the quantities
// built on it: quotient dimensions, Milnor numbers, torus-zero tests.

#include "polynomial.hpp"

#include <set>

namespace nf {

struct GroebnerStats {
    long reductions = 0;
    long pairs = 0;
};

namespace detail {

// Full reduction of p by the basis; counts reduction steps against the budget.
inline Poly reduce(Poly p, const std::vector<Poly>& G, long& budget) {
    Poly r(p.nvars);
    while (!p.is_zero()) {
        const Term lt = p.lead();
        bool hit = false;
        for (const auto& g : G) {
            if (!g.lead().m.divides(lt.m)) continue;
            if (--budget < 0) throw BudgetExceeded("groebner: step budget exhausted");
            p = p - g.scaled(lt.c / g.lead().c, lt.m / g.lead().m);
            hit = true;
            break;
        }
        if (!hit) {
            r.terms.push_back(lt);
            p.terms.erase(p.terms.begin());
        }
    }
    return r;
}

}  // namespace detail

// Reduced Groebner basis, monic, sorted by increasing leading monomial.
inline std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, long budget = 2000000,
                                        GroebnerStats* stats = nullptr) {
    std::vector<Poly> G;
    std::vector<int> sugar;
    struct Pair {
        int i, j;
        Mono lcm;
        int sugar;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm != b.lcm) return grevlex_less(a.lcm, b.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<Pair> pairs;
    std::set<std::pair<int, int>> done;
    long steps = budget;

    auto add = [&](Poly p, int s) {
        p = p.monic();
        const int k = static_cast<int>(G.size());
        for (int i = 0; i < k; ++i) {
            Mono l = lcm(G[i].lead().m, p.lead().m);
            int sg = std::max(sugar[i] + (l.deg - G[i].lead().m.deg), s + (l.deg - p.lead().m.deg));
            pairs.push_back({i, k, l, sg});
        }
        G.push_back(std::move(p));
        sugar.push_back(s);
    };
    auto degree = [](const Poly& p) {
        int d = 0;
        for (const auto& t : p.terms) d = std::max(d, t.m.deg);
        return d;
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Poly r = detail::reduce(g, G, steps);
        if (!r.is_zero()) add(r, degree(g));
    }
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);
        done.insert({pr.i, pr.j});
        if (stats) ++stats->pairs;
        const Mono& li = G[pr.i].lead().m;
        const Mono& lj = G[pr.j].lead().m;
        if (coprime(li, lj)) continue;
        // chain criterion: some g_k divides the lcm and both other pairs are settled
        bool chain = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].lead().m.divides(pr.lcm)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chain = true;
        }
        if (chain) continue;
        if (--steps < 0) throw BudgetExceeded("groebner: step budget exhausted");
        Poly s = G[pr.i].scaled(1 / G[pr.i].lead().c, pr.lcm / li) - G[pr.j].scaled(1 / G[pr.j].lead().c, pr.lcm / lj);
        Poly r = detail::reduce(s, G, steps);
        if (!r.is_zero()) add(r, pr.sugar);
    }
    if (stats) stats->reductions = budget - steps;

    // minimal basis, then interreduce
    std::vector<Poly> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].lead().m.divides(G[i].lead().m) && (G[j].lead().m != G[i].lead().m || j < i)) redundant = true;
        }
        if (!redundant) M.push_back(G[i]);
    }
    std::vector<Poly> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        Poly tail(M[i].nvars);
        tail.terms.assign(M[i].terms.begin() + 1, M[i].terms.end());
        Poly red = detail::reduce(tail, others, steps);
        Poly p(M[i].nvars);
        p.terms.push_back(M[i].lead());
        p = p + red;
        R.push_back(p.monic());
    }
    std::sort(R.begin(), R.end(), [](const Poly& a, const Poly& b) { return grevlex_less(a.lead().m, b.lead().m); });
    return R;
}

inline bool contains_one(const std::vector<Poly>& basis) {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

// Number of monomials outside the leading-term ideal; nullopt if infinite.
inline std::optional<long> count_standard_monomials(const std::vector<Poly>& basis, int nvars, long cap = 50000000) {
    if (contains_one(basis)) return 0;
    std::vector<Mono> leads;
    for (const auto& g : basis) leads.push_back(g.lead().m);
    std::vector<int> bound(nvars, -1);
    for (const auto& l : leads) {
        int nz = -1, cnt = 0;
        for (int i = 0; i < nvars; ++i)
            if (l.e[i]) {
                nz = i;
                ++cnt;
            }
        if (cnt == 1 && (bound[nz] < 0 || l.e[nz] < bound[nz])) bound[nz] = l.e[nz];
    }
    for (int b : bound)
        if (b < 0) return std::nullopt;
    long count = 0;
    Mono m;
    std::function<void(int)> dfs = [&](int var) {
        if (var == nvars) {
            ++count;
            if (count > cap) throw BudgetExceeded("standard monomial count exceeds cap");
            return;
        }
        for (int a = 0; a < bound[var]; ++a) {
            m.e[var] = a;
            m.deg = 0;
            for (int i = 0; i <= var; ++i) m.deg += m.e[i];
            bool divisible = false;
            for (const auto& l : leads) {
                bool d = true;
                for (int i = 0; i <= var && d; ++i)
                    if (l.e[i] > m.e[i]) d = false;
                for (int i = var + 1; i < nvars && d; ++i)
                    if (l.e[i] > 0) d = false;
                if (d) {
                    divisible = true;
                    break;
                }
            }
            if (divisible) break;  // larger a stays divisible
            dfs(var + 1);
        }
        m.e[var] = 0;
    };
    dfs(0);
    return count;
}

inline std::optional<long> quotient_dimension(const std::vector<Poly>& gens, int nvars, long budget = 2000000) {
    return count_standard_monomials(groebner_basis(gens, budget), nvars);
}

// ---------------------------------------------------------------- Milnor number

struct MilnorResult {
    std::optional<long> mu;  // empty: no stabilization (not isolated, or budget)
    std::vector<std::pair<int, long>> trace;  // (N, dim Q[x]/(J + x^N))
    std::string note;
};

inline MilnorResult milnor_number(const Poly& f, int N0 = 8, int max_N = 128, long budget = 2000000) {
    const int n = f.nvars;
    MilnorResult r;
    if (f.constant_term() != 0) {
        r.note = "f(0) != 0";
        return r;
    }
    std::vector<Poly> J;
    for (int i = 0; i < n; ++i) J.push_back(f.derivative(i));
    for (const auto& g : J)
        if (g.constant_term() != 0) {
            r.mu = 0;
            r.note = "origin is not a critical point";
            return r;
        }
    std::optional<long> prev;
    for (int N = N0; N <= max_N; N *= 2) {
        std::vector<Poly> gens = J;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = N;
            gens.push_back(Poly::monomial(n, e));
        }
        long d;
        try {
            d = *quotient_dimension(gens, n, budget);
        } catch (const BudgetExceeded&) {
            r.note = "budget exceeded";
            return r;
        }
        r.trace.emplace_back(N, d);
        if (prev && *prev == d) {
            r.mu = d;
            return r;
        }
        prev = d;
    }
    r.note = "no stabilization; singularity may not be isolated";
    return r;
}

}  // namespace nf
