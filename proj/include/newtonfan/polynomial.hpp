#pragma once
// Sparse multivariate polynomials over Q with graded reverse lexicographic order.

#include "rational.hpp"

#include <array>
#include <map>

namespace nf {

inline constexpr int kMaxVars = 16;

struct Mono {
    std::array<int, kMaxVars> e{};
    int deg = 0;

    static Mono from(const std::vector<int>& v) {
        if (v.size() > static_cast<std::size_t>(kMaxVars)) throw PreconditionError("too many variables");
        Mono m;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw InputError("negative exponent");
            m.e[i] = v[i];
            m.deg += v[i];
        }
        return m;
    }
    std::vector<int> vec(int n) const { return std::vector<int>(e.begin(), e.begin() + n); }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
        r.deg = a.deg + b.deg;
        return r;
    }
    // assumes b divides a
    friend Mono operator/(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
        r.deg = a.deg - b.deg;
        return r;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
};

inline Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

inline bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// grevlex: higher degree wins; ties broken by the last differing exponent, smaller wins
inline bool grevlex_less(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(a, b); }
};

struct Term {
    Mono m;
    Rat c;
};

class Poly {
public:
    int nvars = 0;
    std::vector<Term> terms;  // strictly decreasing, nonzero coefficients

    Poly() = default;
    explicit Poly(int n) : nvars(n) {}

    static Poly constant(int n, const Rat& c) {
        Poly p(n);
        if (c != 0) p.terms.push_back({Mono{}, c});
        return p;
    }
    static Poly variable(int n, int i) {
        Poly p(n);
        Mono m;
        m.e[i] = 1;
        m.deg = 1;
        p.terms.push_back({m, Rat(1)});
        return p;
    }
    static Poly monomial(int n, const std::vector<int>& exps, const Rat& c = 1) {
        Poly p(n);
        if (c != 0) p.terms.push_back({Mono::from(exps), c});
        return p;
    }
    static Poly from_terms(int n, const std::vector<std::pair<std::vector<int>, Rat>>& ts) {
        std::map<Mono, Rat, MonoLess> acc;
        for (const auto& [e, c] : ts) {
            if (static_cast<int>(e.size()) != n) throw InputError("polynomial: exponent length mismatch");
            acc[Mono::from(e)] += c;
        }
        Poly p(n);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) p.terms.push_back({it->first, it->second});
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].m.deg == 0); }

    Rat coeff(const Mono& m) const {
        for (const auto& t : terms)
            if (t.m == m) return t.c;
        return 0;
    }
    Rat constant_term() const { return coeff(Mono{}); }

    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, Rat(1)); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, Rat(-1)); }

    Poly scaled(const Rat& c, const Mono& m = Mono{}) const {
        Poly r(nvars);
        if (c == 0) return r;
        r.terms.reserve(terms.size());
        for (const auto& t : terms) r.terms.push_back({t.m * m, t.c * c});
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(std::max(a.nvars, b.nvars));
        for (const auto& t : b.terms) r = r + a.scaled(t.c, t.m);
        return r;
    }

    Poly derivative(int i) const {
        std::map<Mono, Rat, MonoLess> acc;
        for (const auto& t : terms) {
            if (t.m.e[i] == 0) continue;
            Mono m = t.m;
            Rat c = t.c * m.e[i];
            m.e[i] -= 1;
            m.deg -= 1;
            acc[m] += c;
        }
        Poly r(nvars);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) r.terms.push_back({it->first, it->second});
        return r;
    }

    // Set variable i to zero.
    Poly at_zero(int i) const {
        Poly r(nvars);
        for (const auto& t : terms)
            if (t.m.e[i] == 0) r.terms.push_back(t);
        return r;
    }

    Poly monic() const {
        if (terms.empty()) return *this;
        return scaled(1 / terms.front().c);
    }

    std::vector<std::pair<std::vector<int>, Rat>> to_terms() const {
        std::vector<std::pair<std::vector<int>, Rat>> r;
        for (const auto& t : terms) r.emplace_back(t.m.vec(nvars), t.c);
        std::sort(r.begin(), r.end());
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms) {
            Rat c = t.c;
            if (!first) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            if (c < 0) c = -c;
            bool unit = (c == 1 && t.m.deg > 0);
            if (!unit) s += c.get_str();
            bool need_star = !unit;
            for (int i = 0; i < nvars; ++i) {
                if (t.m.e[i] == 0) continue;
                if (need_star) s += "*";
                s += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
                if (t.m.e[i] > 1) s += "^" + std::to_string(t.m.e[i]);
                need_star = true;
            }
            first = false;
        }
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i)
            if (a.terms[i].m != b.terms[i].m || a.terms[i].c != b.terms[i].c) return false;
        return true;
    }

private:
    static Poly combine(const Poly& a, const Poly& b, const Rat& sb) {
        Poly r(std::max(a.nvars, b.nvars));
        r.terms.reserve(a.terms.size() + b.terms.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms.size() || j < b.terms.size()) {
            if (j == b.terms.size() || (i < a.terms.size() && grevlex_less(b.terms[j].m, a.terms[i].m))) {
                r.terms.push_back(a.terms[i++]);
            } else if (i == a.terms.size() || grevlex_less(a.terms[i].m, b.terms[j].m)) {
                r.terms.push_back({b.terms[j].m, b.terms[j].c * sb});
                ++j;
            } else {
                Rat c = a.terms[i].c + b.terms[j].c * sb;
                if (c != 0) r.terms.push_back({a.terms[i].m, c});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

// Exponent vectors of the nonzero terms as rational points.
inline std::vector<Point> support_points(const Poly& f) {
    std::vector<Point> pts;
    for (const auto& t : f.terms) {
        Point p;
        for (int i = 0; i < f.nvars; ++i) p.push_back(Rat(t.m.e[i]));
        pts.push_back(std::move(p));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

// ---------------------------------------------------------------- univariate helpers

// Dense coefficients, index = degree.
using UPoly = std::vector<Rat>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly umod(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    trim(d);
    return d;
}

}  // namespace nf
