#pragma once
// Input documents (supports, polynomial families, arc lists, fans) read from JSON.

#include "degenerate.hpp"

#include <json.hpp>

#include <set>

namespace nf {

using ojson = nlohmann::ordered_json;

struct TermCoeff {
    std::vector<int> s_exponent;
    Rat value;
    friend bool operator==(const TermCoeff&, const TermCoeff&) = default;
};

struct InputTerm {
    std::vector<int> exponent;
    std::vector<TermCoeff> coefficient;
    friend bool operator==(const InputTerm&, const InputTerm&) = default;
};

struct InputDocument {
    int schema_version = 1;
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    std::optional<std::vector<Point>> support;
    std::optional<std::vector<InputTerm>> terms;
    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

inline Rat rat_field(const ojson& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rat(v.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
        }
    }
    if (v.is_number_integer()) return Rat(v.dump());
    fail(where, "expected an integer or a rational string \"p/q\"");
}

inline int exp_field(const ojson& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected a non-negative integer exponent");
    long long x = v.get<long long>();
    if (x < 0 || x > 100000) fail(where, "exponent out of range");
    return static_cast<int>(x);
}

inline std::vector<int> exp_vector(const ojson& v, std::size_t len, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    if (v.size() != len) fail(where, "expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
    std::vector<int> r;
    for (std::size_t k = 0; k < v.size(); ++k) r.push_back(exp_field(v[k], where + "/" + std::to_string(k)));
    return r;
}

inline std::vector<std::string> names_field(const ojson& doc, const char* key, bool required) {
    std::vector<std::string> r;
    if (!doc.contains(key)) {
        if (required) fail(std::string("/") + key, "missing");
        return r;
    }
    const ojson& v = doc[key];
    if (!v.is_array()) fail(std::string("/") + key, "expected an array of names");
    std::set<std::string> seen;
    for (std::size_t k = 0; k < v.size(); ++k) {
        std::string where = std::string("/") + key + "/" + std::to_string(k);
        if (!v[k].is_string() || v[k].get<std::string>().empty()) fail(where, "expected a non-empty name");
        if (!seen.insert(v[k].get<std::string>()).second) fail(where, "duplicate name");
        r.push_back(v[k].get<std::string>());
    }
    return r;
}

}  // namespace detail

// Parses JSON text; syntax errors carry line and column, semantic errors a JSON pointer.
inline ojson parse_json(const std::string& text, const std::string& source = "input") {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_column(text, e.byte);
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error");
    }
}

inline InputDocument input_from_json(const ojson& doc) {
    using detail::fail;
    if (!doc.is_object()) fail("/", "expected an object");
    InputDocument d;
    if (doc.contains("schema_version")) {
        if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != 1)
            fail("/schema_version", "unsupported schema version");
    }
    d.variables = detail::names_field(doc, "variables", true);
    d.parameters = detail::names_field(doc, "parameters", false);
    const std::size_t n = d.variables.size(), m = d.parameters.size();
    if (n == 0) fail("/variables", "need at least one variable");
    if (n > static_cast<std::size_t>(kMaxDim)) fail("/variables", "at most " + std::to_string(kMaxDim) + " variables");
    if (n + m > static_cast<std::size_t>(kMaxVars)) fail("/parameters", "too many variables in total");
    const bool has_s = doc.contains("support"), has_t = doc.contains("terms");
    if (has_s == has_t) fail("/", "exactly one of \"support\" or \"terms\" is required");
    if (has_s) {
        const ojson& v = doc["support"];
        if (!v.is_array()) fail("/support", "expected an array of points");
        std::vector<Point> pts;
        std::set<Point> seen;
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::string where = "/support/" + std::to_string(k);
            if (!v[k].is_array() || v[k].size() != n)
                fail(where, "expected a point with " + std::to_string(n) + " coordinates");
            Point p;
            for (std::size_t j = 0; j < n; ++j) {
                Rat x = detail::rat_field(v[k][j], where + "/" + std::to_string(j));
                if (x < 0) fail(where, "coordinates must be non-negative");
                p.push_back(x);
            }
            if (!seen.insert(p).second) fail(where, "duplicate point");
            pts.push_back(std::move(p));
        }
        d.support = std::move(pts);
    } else {
        const ojson& v = doc["terms"];
        if (!v.is_array()) fail("/terms", "expected an array of terms");
        std::vector<InputTerm> ts;
        std::set<std::vector<int>> seen;
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::string where = "/terms/" + std::to_string(k);
            if (!v[k].is_object() || !v[k].contains("exponent") || !v[k].contains("coefficient"))
                fail(where, "expected {\"exponent\", \"coefficient\"}");
            InputTerm t;
            t.exponent = detail::exp_vector(v[k]["exponent"], n, where + "/exponent");
            if (!seen.insert(t.exponent).second) fail(where, "duplicate exponent");
            const ojson& c = v[k]["coefficient"];
            if (c.is_string() || c.is_number_integer()) {
                t.coefficient.push_back({std::vector<int>(m, 0), detail::rat_field(c, where + "/coefficient")});
            } else if (c.is_array()) {
                std::set<std::vector<int>> seen_s;
                for (std::size_t j = 0; j < c.size(); ++j) {
                    std::string cw = where + "/coefficient/" + std::to_string(j);
                    if (!c[j].is_object() || !c[j].contains("value")) fail(cw, "expected {\"s_exponent\", \"value\"}");
                    TermCoeff tc;
                    tc.s_exponent = c[j].contains("s_exponent") ? detail::exp_vector(c[j]["s_exponent"], m, cw + "/s_exponent")
                                                                : std::vector<int>(m, 0);
                    if (!seen_s.insert(tc.s_exponent).second) fail(cw, "duplicate parameter exponent");
                    tc.value = detail::rat_field(c[j]["value"], cw + "/value");
                    t.coefficient.push_back(std::move(tc));
                }
            } else {
                fail(where + "/coefficient", "expected a rational or a list of parameter terms");
            }
            ts.push_back(std::move(t));
        }
        d.terms = std::move(ts);
    }
    return d;
}

inline InputDocument parse_input(const std::string& text, const std::string& source = "input") {
    return input_from_json(parse_json(text, source));
}

inline ojson to_json(const InputDocument& d) {
    ojson j;
    j["schema_version"] = d.schema_version;
    j["variables"] = d.variables;
    j["parameters"] = d.parameters;
    if (d.support) {
        ojson pts = ojson::array();
        for (const auto& p : *d.support) {
            ojson row = ojson::array();
            for (const auto& x : p) row.push_back(to_string(x));
            pts.push_back(row);
        }
        j["support"] = pts;
    }
    if (d.terms) {
        ojson ts = ojson::array();
        for (const auto& t : *d.terms) {
            ojson cs = ojson::array();
            for (const auto& c : t.coefficient) cs.push_back({{"s_exponent", c.s_exponent}, {"value", to_string(c.value)}});
            ts.push_back({{"exponent", t.exponent}, {"coefficient", cs}});
        }
        j["terms"] = ts;
    }
    return j;
}

inline std::string serialize(const InputDocument& d, int indent = 2) { return to_json(d).dump(indent); }

inline DeformationFamily to_family(const InputDocument& d) {
    if (!d.terms) throw InputError("expected a \"terms\" document");
    const int n = static_cast<int>(d.variables.size()), m = static_cast<int>(d.parameters.size());
    std::vector<std::pair<std::vector<int>, Rat>> ts;
    for (const auto& t : *d.terms)
        for (const auto& c : t.coefficient) {
            std::vector<int> e = t.exponent;
            e.insert(e.end(), c.s_exponent.begin(), c.s_exponent.end());
            ts.emplace_back(std::move(e), c.value);
        }
    return make_family(n, m, Poly::from_terms(n + m, ts), d.variables, d.parameters);
}

// Polynomial in the x-variables only; parameters must be absent.
inline Poly to_polynomial(const InputDocument& d) {
    if (!d.parameters.empty()) throw InputError("expected a polynomial without parameters");
    return base_polynomial(to_family(d));
}

// The support of f = F(x, 0), or the listed support.
inline SupportSet to_support(const InputDocument& d) {
    if (d.support) {
        if (d.support->empty()) throw InputError("/support: empty support set");
        for (const auto& p : *d.support)
            if (is_zero(p)) throw InputError("/support: the origin is not allowed");
        return make_support(static_cast<int>(d.variables.size()), *d.support);
    }
    return base_support(to_family(d));
}

// ---------------------------------------------------------------- arcs and fans

inline std::vector<MonomialArc> parse_arcs(const ojson& doc, int n, int m) {
    using detail::fail;
    std::vector<MonomialArc> arcs;
    auto orders = [&](const ojson& v, std::size_t len, const std::string& where) {
        if (!v.is_array() || v.size() != len) fail(where, "expected " + std::to_string(len) + " orders");
        std::vector<long> r;
        for (std::size_t k = 0; k < len; ++k) {
            if (!v[k].is_number_integer()) fail(where, "orders must be integers");
            r.push_back(v[k].get<long>());
        }
        return r;
    };
    auto coeffs = [&](const ojson& parent, const char* key, std::size_t len, const std::string& where) {
        std::vector<Rat> r;
        if (!parent.contains(key)) return r;
        const ojson& v = parent[key];
        if (!v.is_array() || v.size() != len) fail(where + "/" + key, "expected " + std::to_string(len) + " coefficients");
        for (std::size_t k = 0; k < len; ++k) r.push_back(detail::rat_field(v[k], where + "/" + key));
        return r;
    };
    if (!doc.is_object()) fail("/", "expected an object");
    if (doc.contains("arcs")) {
        const ojson& v = doc["arcs"];
        if (!v.is_array()) fail("/arcs", "expected an array");
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::string where = "/arcs/" + std::to_string(k);
            if (!v[k].contains("x_orders") || !v[k].contains("s_orders")) fail(where, "missing x_orders or s_orders");
            try {
                arcs.push_back(make_arc(orders(v[k]["x_orders"], n, where + "/x_orders"),
                                        orders(v[k]["s_orders"], m, where + "/s_orders"), coeffs(v[k], "x_coeffs", n, where),
                                        coeffs(v[k], "s_coeffs", m, where)));
            } catch (const InputError& e) {
                fail(where, e.what());
            }
        }
    }
    if (doc.contains("grid")) {
        const ojson& g = doc["grid"];
        if (!g.contains("x_min") || !g.contains("x_max") || !g.contains("s_orders")) fail("/grid", "need x_min, x_max, s_orders");
        long lo = g["x_min"].get<long>(), hi = g["x_max"].get<long>();
        if (lo < 1 || hi < lo || hi > 50) fail("/grid", "invalid order range");
        auto g_arcs = arc_grid(n, lo, hi, orders(g["s_orders"], m, "/grid/s_orders"));
        arcs.insert(arcs.end(), g_arcs.begin(), g_arcs.end());
    }
    if (arcs.empty()) fail("/", "no arcs given (use \"arcs\" or \"grid\")");
    return arcs;
}

inline Fan parse_fan(const ojson& doc) {
    using detail::fail;
    if (!doc.is_object() || !doc.contains("fan")) fail("/", "expected {\"fan\": {...}}");
    const ojson& f = doc["fan"];
    if (!f.contains("ambient") || !f["ambient"].is_number_integer()) fail("/fan/ambient", "expected an integer");
    Fan F{f["ambient"].get<int>(), {}};
    if (F.ambient < 1 || F.ambient > kMaxDim) fail("/fan/ambient", "dimension out of range");
    if (!f.contains("cones") || !f["cones"].is_array()) fail("/fan/cones", "expected an array of cones");
    for (std::size_t k = 0; k < f["cones"].size(); ++k) {
        std::string where = "/fan/cones/" + std::to_string(k);
        const ojson& c = f["cones"][k];
        if (!c.is_array() || c.empty()) fail(where, "expected a list of generators");
        std::vector<Point> gens;
        for (std::size_t g = 0; g < c.size(); ++g) {
            if (!c[g].is_array() || c[g].size() != static_cast<std::size_t>(F.ambient)) fail(where, "generator length mismatch");
            Point p;
            for (const auto& x : c[g]) p.push_back(detail::rat_field(x, where));
            gens.push_back(p);
        }
        try {
            F.cones.push_back(make_cone(gens));
        } catch (const std::exception& e) {
            fail(where, e.what());
        }
    }
    return F;
}

}  // namespace nf
