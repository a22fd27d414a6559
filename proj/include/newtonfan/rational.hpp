#pragma once
// Exact rational scalars, points, coordinate subsets and small dense linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nf {

using Rat = mpq_class;
using Int = mpz_class;
using Point = std::vector<Rat>;
using Matrix = std::vector<Point>;  // row major

// Error kinds map onto CLI exit codes (2, 3, 4, internal).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr int kMaxDim = 8;

inline Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw InputError("malformed rational literal '" + text + "'");
    if (num[0] == '+') num = num.substr(1);
    Int d(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline std::string to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += p[i].get_str();
    }
    return out + ")";
}

inline Point make_point(std::initializer_list<Rat> xs) { return Point(xs); }

inline Point make_point(const std::vector<long>& xs) {
    Point p;
    p.reserve(xs.size());
    for (long x : xs) p.emplace_back(x);
    return p;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_integral(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rat& r) { return is_integer(r); });
}

inline Rat dot(const Point& a, const Point& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scale(const Point& a, const Rat& t) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

inline Rat coord_sum(const Point& a) {
    Rat s = 0;
    for (const auto& x : a) s += x;
    return s;
}

inline bool is_zero(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rat& r) { return r == 0; });
}

inline bool is_nonnegative(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rat& r) { return r >= 0; });
}

// p <= q componentwise
inline bool dominated_by(const Point& p, const Point& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > q[i]) return false;
    return true;
}

inline Point unit_vector(int n, int i) {
    Point e(n, Rat(0));
    e[i] = 1;
    return e;
}

// Primitive integer vector in the direction of an integer vector.
inline Point primitive_vector(const Point& v) {
    if (is_zero(v)) throw PreconditionError("primitive_vector: zero vector");
    Int g = 0;
    for (const auto& x : v) {
        if (!is_integer(x)) throw PreconditionError("primitive_vector: non-integer entry");
        Int a = x.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    Point r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i].get_num() / g);
    return r;
}

// Scale a nonzero rational vector by a positive factor to a primitive integer vector.
inline Point clear_denominators(const Point& v, Rat* factor = nullptr) {
    Int l = 1;
    for (const auto& x : v) {
        Int d = x.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Point w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * l;
    Point p = primitive_vector(w);
    if (factor) {
        // p = v * factor
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                *factor = p[i] / v[i];
                break;
            }
    }
    return p;
}

// ---------------------------------------------------------------- CoordSet

// Subset of {0..n-1}, stored as a bitmask. Printed 1-based.
struct CoordSet {
    std::uint32_t bits = 0;

    CoordSet() = default;
    explicit CoordSet(std::uint32_t b) : bits(b) {}
    static CoordSet of(std::initializer_list<int> idx) {
        CoordSet c;
        for (int i : idx) c.bits |= 1u << i;
        return c;
    }
    static CoordSet full(int n) { return CoordSet((n >= 32) ? ~0u : ((1u << n) - 1)); }
    bool contains(int i) const { return (bits >> i) & 1u; }
    int size() const { return __builtin_popcount(bits); }
    bool empty() const { return bits == 0; }
    CoordSet complement(int n) const { return CoordSet(full(n).bits & ~bits); }
    bool subset_of(CoordSet o) const { return (bits & ~o.bits) == 0; }
    std::vector<int> indices() const {
        std::vector<int> r;
        for (int i = 0; i < 32; ++i)
            if (contains(i)) r.push_back(i);
        return r;
    }
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }
    friend bool operator==(CoordSet a, CoordSet b) { return a.bits == b.bits; }
    friend bool operator!=(CoordSet a, CoordSet b) { return a.bits != b.bits; }
    friend bool operator<(CoordSet a, CoordSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.indices() < b.indices();
    }
};

// Positions of nonzero coordinates.
inline CoordSet support(const Point& p) {
    CoordSet c;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) c.bits |= 1u << i;
    return c;
}

inline bool in_subspace(const Point& p, CoordSet I) { return support(p).subset_of(I); }

// Keep only the coordinates listed in idx.
inline Point take(const Point& p, const std::vector<int>& idx) {
    Point r;
    r.reserve(idx.size());
    for (int i : idx) r.push_back(p[i]);
    return r;
}

// --------------------------------------------------------- linear algebra

struct Echelon {
    Matrix rows;              // reduced row echelon form, zero rows removed
    std::vector<int> pivots;  // pivot column per row
    int rank() const { return static_cast<int>(pivots.size()); }
};

inline Echelon rref(Matrix m) {
    Echelon e;
    if (m.empty()) return e;
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    const int rows = static_cast<int>(m.size());
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

inline int rank(const Matrix& m) { return rref(m).rank(); }

// Basis of {x : m x = 0}; cols = number of unknowns.
inline Matrix nullspace(const Matrix& m, int cols) {
    Echelon e = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (int p : e.pivots) is_piv[p] = true;
    Matrix basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Point v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat det(Matrix m) {
    const int n = static_cast<int>(m.size());
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

// Solve sum_i lambda_i rows[i] = target; nullopt if target not in the row span.
// rows are assumed linearly independent.
inline std::optional<Point> solve_combination(const Matrix& rows, const Point& target) {
    const int k = static_cast<int>(rows.size());
    const int n = static_cast<int>(target.size());
    // columns = rows, augmented with target: n equations, k unknowns
    Matrix a(n, Point(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = rows[j][i];
        a[i][k] = target[i];
    }
    Echelon e = rref(a);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        if (e.pivots[r] == k) return std::nullopt;
    if (e.rank() != k) throw InternalError("solve_combination: dependent rows");
    Point lam(k);
    for (std::size_t r = 0; r < e.rows.size(); ++r) lam[e.pivots[r]] = e.rows[r][k];
    return lam;
}

inline Int factorial(int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Int gcd(Int a, const Int& b) {
    mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return a;
}

// Affine rank (dimension of the affine hull) of a point list; -1 if empty.
inline int affine_dim(const std::vector<Point>& pts) {
    if (pts.empty()) return -1;
    Matrix d;
    for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts[0]));
    return d.empty() ? 0 : rank(d);
}

// Maximal minors of a k x n matrix (k <= n), in lexicographic column-subset order.
inline std::vector<Rat> maximal_minors(const Matrix& rows) {
    const int k = static_cast<int>(rows.size());
    const int n = k ? static_cast<int>(rows[0].size()) : 0;
    std::vector<Rat> out;
    std::vector<int> cols(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            Matrix m(k, Point(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m[i][j] = rows[i][cols[j]];
            out.push_back(det(m));
            return;
        }
        for (int c = start; c < n; ++c) {
            cols[depth] = c;
            rec(c + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace nf
