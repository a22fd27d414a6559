#include "newtonfan/report.hpp"

#include <cstdio>

namespace nf {

namespace {

ojson jrat(const Rat& r) { return to_string(r); }

ojson jpoint(const Point& p) {
    ojson a = ojson::array();
    for (const auto& x : p) a.push_back(to_string(x));
    return a;
}

ojson jpoints(const std::vector<Point>& ps) {
    ojson a = ojson::array();
    for (const auto& p : ps) a.push_back(jpoint(p));
    return a;
}

ojson jset(CoordSet s) {
    ojson a = ojson::array();
    for (int i : s.indices()) a.push_back(i + 1);
    return a;
}

ojson jfan(const Fan& F) {
    ojson cones = ojson::array();
    for (const auto& c : F.cones) cones.push_back(jpoints(c.gens));
    return {{"ambient", F.ambient}, {"cones", cones}};
}

std::string doc_canonical(const InputDocument& d) { return to_json(d).dump(); }

ojson report(const std::string& name, ojson args, const std::string& canonical_inputs, ojson results,
             const std::vector<std::string>& warnings) {
    ojson r;
    r["command"] = {{"name", name}, {"args", std::move(args)}};
    r["inputs"] = {{"digest", digest(canonical_inputs)}};
    r["results"] = std::move(results);
    r["warnings"] = warnings;
    return r;
}

ojson polytope_dump(const NewtonPolyhedron& G) {
    ojson facets = ojson::array();
    for (std::size_t k = 0; k < G.facets.size(); ++k)
        facets.push_back({{"normal", jpoint(G.facets[k].normal)}, {"offset", jrat(G.facets[k].offset)}});
    return {{"vertices", jpoints(G.vertices)}, {"facets", facets}};
}

ojson certificate_json(const ApexCertificate& c) {
    ojson cands = ojson::array();
    for (const auto& a : c.candidates)
        cands.push_back({{"axis", a.axis + 1},
                         {"edge", {jpoint(a.edge.from), jpoint(a.edge.to)}},
                         {"beta", jpoint(a.beta)},
                         {"good", a.good}});
    return {{"alpha", jpoint(c.alpha)},
            {"I", jset(c.I)},
            {"axis", c.axis + 1},
            {"edge", {jpoint(c.edge.from), jpoint(c.edge.to)}},
            {"beta", jpoint(c.beta)},
            {"good", c.good},
            {"candidates", cands}};
}

ojson mu_json(const MuConstantResult& r) {
    ojson certs = ojson::array();
    for (std::size_t k = 0; k < r.verd.size(); ++k) {
        if (r.certificates[k]) certs.push_back(certificate_json(*r.certificates[k]));
        else certs.push_back({{"alpha", jpoint(r.verd[k])}, {"apex", nullptr}});
    }
    return {{"verdict", r.verdict},
            {"verd", jpoints(r.verd)},
            {"certificates", certs},
            {"nu_base", jrat(r.nu_s)},
            {"nu_deformed", jrat(r.nu_s_prime)},
            {"both_convenient", r.both_convenient}};
}

ojson nondeg_json(const NondegReport& r) {
    ojson faces = ojson::array();
    for (const auto& f : r.faces)
        faces.push_back({{"vertices", jpoints(f.vertices)}, {"dim", f.dim}, {"status", to_string(f.status)}, {"method", f.method}});
    std::string verdict = r.any_degenerate() ? "degenerate" : r.nondegenerate() ? "non-degenerate" : "unchecked";
    return {{"verdict", verdict}, {"faces", faces}};
}

ojson series_json(const SeriesResult& s) {
    ojson tr = ojson::array();
    for (const auto& [m, v] : s.trace) tr.push_back({{"m", m}, {"nu", jrat(v)}});
    return {{"value", jrat(s.value)}, {"stabilized", s.stabilized}, {"trace", tr}};
}

ojson poly_arc_json(const MonomialArc& a) {
    ojson xc = ojson::array(), sc = ojson::array();
    for (const auto& c : a.a) xc.push_back(jrat(c));
    for (const auto& c : a.b) sc.push_back(jrat(c));
    return {{"x_orders", a.r}, {"s_orders", a.q}, {"x_coeffs", xc}, {"s_coeffs", sc}};
}

}  // namespace

std::string digest(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string render(const ojson& r, bool pretty) { return pretty ? r.dump(2) + "\n" : r.dump() + "\n"; }

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InputError*>(&e)) return 2;
    if (dynamic_cast<const PreconditionError*>(&e)) return 3;
    if (dynamic_cast<const BudgetExceeded*>(&e)) return 4;
    return 1;
}

ojson error_report(const std::string& command, const std::exception& e) {
    const char* kind = dynamic_cast<const InputError*>(&e)          ? "input"
                       : dynamic_cast<const PreconditionError*>(&e) ? "precondition"
                       : dynamic_cast<const BudgetExceeded*>(&e)    ? "budget"
                                                                    : "internal";
    ojson r;
    r["command"] = {{"name", command}};
    r["error"] = {{"kind", kind}, {"message", e.what()}, {"exit_code", exit_code_for(e)}};
    return r;
}

ojson cmd_nu(const InputDocument& doc, const CommandOptions& opt) {
    SupportSet S = to_support(doc);
    NewtonPolyhedron G = gamma_plus(S);
    std::vector<std::string> warn;
    ojson res;
    ConvenienceReport conv = convenience(G, CoordSet::full(S.n));
    ojson missing = ojson::array();
    for (int j : conv.missing_axes) missing.push_back(j + 1);
    if (opt.series) {
        SeriesResult s = newton_number_series(S, opt.cap);
        res["nu"] = jrat(s.value);
        res["series"] = series_json(s);
        if (!s.stabilized) warn.push_back("nu did not stabilize up to the cap; it may be infinite");
    } else {
        if (!conv.missing_axes.empty())
            throw PreconditionError("nu: support is not pre-convenient (missing axes " + missing.dump() + "); use --series");
        NewtonVolumeVector V = newton_volume_vector(S);
        res["nu"] = jrat(alternating_sum(V.V));
        ojson vv = ojson::array();
        for (const auto& v : V.V) vv.push_back(jrat(v));
        res["volume_vector"] = vv;
    }
    res["convenience"] = {{"verdict", to_string(conv.verdict)}, {"missing_axes", missing}};
    if (opt.emit_polytope) res["polytope"] = polytope_dump(G);
    ojson args = {{"series", opt.series}, {"cap", opt.cap}, {"emit_polytope", opt.emit_polytope}};
    return report("nu", args, doc_canonical(doc), res, warn);
}

ojson cmd_mu_test(const InputDocument& base, const std::optional<InputDocument>& deformed, const CommandOptions& opt) {
    SupportSet S, Sp;
    std::string canon = doc_canonical(base);
    if (deformed) {
        S = to_support(base);
        Sp = to_support(*deformed);
        canon += "\n" + doc_canonical(*deformed);
    } else {
        DeformationFamily D = to_family(base);
        S = base_support(D);
        Sp = generic_support(D);
    }
    MuConstantResult r = mu_constant_test(S, Sp);
    ojson res = mu_json(r);
    if (opt.emit_polytope) res["polytopes"] = {{"base", polytope_dump(gamma_plus(S))}, {"deformed", polytope_dump(gamma_plus(Sp))}};
    return report("mu-test", {{"two_files", deformed.has_value()}}, canon, res, r.warnings);
}

ojson cmd_resolve(const InputDocument& family, const CommandOptions& opt) {
    DeformationFamily D = to_family(family);
    ResolutionOptions ro;
    ro.skip_smoothness = opt.skip_smoothness;
    ro.budget = opt.budget;
    ro.threads = opt.threads;
    ro.nondeg_mode = parse_nondeg_mode(opt.nondeg_mode);
    ResolutionResult R = simultaneous_resolution(D, ro);
    std::vector<std::string> ynames;
    for (int k = 0; k < D.n; ++k) ynames.push_back("y" + std::to_string(k + 1));
    for (const auto& s : D.s_names) ynames.push_back(s);
    ojson charts = ojson::array();
    std::vector<std::string> warn = R.warnings;
    for (const auto& c : R.charts) {
        ojson ch;
        ch["generators"] = jpoints(c.chart.gens);
        ch["m"] = c.transform.m;
        ch["strict_transform"] = c.transform.Fbar.str(ynames);
        ch["status"] = to_string(c.status);
        if (c.verd_vertex) {
            ch["verd_vertex"] = jpoint(*c.verd_vertex);
            ch["apex_axis"] = c.apex_axis + 1;
            ch["normal_form"] = c.normal_form;
        }
        ch["smoothness"] = {{"performed", c.smoothness.performed}, {"smooth", c.smoothness.smooth}, {"strata", c.smoothness.strata}};
        if (!c.smoothness.note.empty()) ch["smoothness"]["note"] = c.smoothness.note;
        charts.push_back(ch);
    }
    if (R.count(ChartStatus::unchecked) > 0) warn.push_back(std::to_string(R.count(ChartStatus::unchecked)) + " charts unchecked");
    ojson res;
    res["mu_constancy"] = mu_json(R.mu);
    res["nondegeneracy"] = nondeg_json(R.nondeg)["verdict"];
    res["fan"] = jfan(R.fan);
    res["charts"] = charts;
    res["summary"] = {{"cones", R.fan.cones.size()},
                      {"unit", R.count(ChartStatus::unit)},
                      {"smooth-verified", R.count(ChartStatus::smooth_verified)},
                      {"unchecked", R.count(ChartStatus::unchecked)},
                      {"failed", R.count(ChartStatus::failed)}};
    ojson args = {{"skip_smoothness", opt.skip_smoothness}, {"budget", opt.budget}, {"nondeg_mode", opt.nondeg_mode}};
    return report("resolve", args, doc_canonical(family), res, warn);
}

ojson cmd_fan(const InputDocument& doc, const CommandOptions& opt) {
    SupportSet S = to_support(doc);
    NewtonPolyhedron G = gamma_plus(S);
    require_pre_convenient(G, "fan");
    Fan F = newton_fan(G);
    ojson cones = ojson::array();
    for (const auto& v : G.vertices) {
        LatticeCone c = newton_cone_at(G, v);
        ojson hv = ojson::array();
        for (const auto& q : c.gens) hv.push_back(jrat(G.support_value(q)));
        cones.push_back({{"vertex", jpoint(v)}, {"generators", jpoints(c.gens)}, {"support_values", hv}});
    }
    ojson res = {{"fan", jfan(F)}, {"vertex_cones", cones}, {"rays", jpoints(fan_rays(F))}};
    if (opt.emit_polytope) res["polytope"] = polytope_dump(G);
    return report("fan", {{"emit_polytope", opt.emit_polytope}}, doc_canonical(doc), res, {});
}

ojson cmd_regularize(const ojson& raw, const CommandOptions& opt) {
    Fan F;
    std::optional<NewtonPolyhedron> G;
    if (raw.is_object() && raw.contains("fan")) {
        F = parse_fan(raw);
    } else {
        InputDocument doc = input_from_json(raw);
        G = gamma_plus(to_support(doc));
        require_pre_convenient(*G, "regularize");
        F = newton_fan(*G);
    }
    Fan R = regularize_fan(simplicialize(F), opt.budget);
    ojson dets = ojson::array();
    for (const auto& c : R.cones) dets.push_back(jrat(det(c.gens)));
    ojson res = {{"input", jfan(F)}, {"fan", jfan(R)}, {"determinants", dets}};
    if (G) {
        AdmissibilityReport a = check_admissible(R, *G);
        res["admissible"] = a.admissible;
        if (!a.reason.empty()) res["reason"] = a.reason;
    }
    return report("regularize", {{"budget", opt.budget}}, raw.dump(), res, {});
}

ojson cmd_milnor(const InputDocument& doc, const CommandOptions& opt) {
    Poly f = to_polynomial(doc);
    std::vector<std::string> warn;
    MilnorResult m = milnor_number(f, 8, 128, opt.budget * 10);
    ojson tr = ojson::array();
    for (const auto& [N, d] : m.trace) tr.push_back({{"N", N}, {"dim", d}});
    ojson res;
    res["mu"] = m.mu ? ojson(std::to_string(*m.mu)) : ojson(nullptr);
    res["trace"] = tr;
    if (!m.note.empty()) res["note"] = m.note;
    if (!m.mu) warn.push_back("Milnor number not determined: " + m.note);
    // μ against ν when the polynomial has a pre-convenient Newton polyhedron
    std::vector<Point> pts;
    for (const auto& p : support_points(f))
        if (!is_zero(p)) pts.push_back(p);
    if (m.mu && !pts.empty() && f.constant_term() == 0) {
        KouchnirenkoReport k = kouchnirenko_crosscheck(f, opt.budget * 10, opt.cap);
        res["kouchnirenko"] = {{"nu", jrat(k.nu.value)},
                               {"nu_stabilized", k.nu.stabilized},
                               {"nondegenerate", k.equality_expected},
                               {"mu_ge_nu", k.inequality_holds},
                               {"mu_eq_nu", k.equality_holds}};
    }
    return report("milnor", {{"budget", opt.budget}}, doc_canonical(doc), res, warn);
}

ojson cmd_nondeg(const InputDocument& doc, const CommandOptions& opt) {
    Poly f = to_polynomial(doc);
    NondegReport r = nondegeneracy_check(f, parse_nondeg_mode(opt.nondeg_mode), opt.budget);
    std::vector<std::string> warn;
    if (!r.any_degenerate() && !r.nondegenerate()) warn.push_back("some faces were not checked");
    return report("nondeg", {{"mode", opt.nondeg_mode}, {"budget", opt.budget}}, doc_canonical(doc), nondeg_json(r), warn);
}

ojson cmd_valuative(const InputDocument& family, const ojson& arcs_doc, const CommandOptions& opt) {
    DeformationFamily D = to_family(family);
    std::vector<MonomialArc> arcs = parse_arcs(arcs_doc, D.n, D.m);
    FalsifierResult r = valuative_falsifier(D, arcs, opt.threads);
    ojson out = ojson::array();
    for (const auto& a : r.arcs) {
        ojson cs = ojson::array();
        for (const auto& c : a.comparisons) {
            ojson e;
            e["parameter"] = D.s_names[c.parameter];
            e["s_order"] = c.s_order ? ojson({{"order", c.s_order->order}, {"lower_bound_only", c.s_order->initial_form_vanishes}})
                                     : ojson(nullptr);
            e["x_min_order"] = c.x_min ? ojson({{"order", c.x_min->order}, {"lower_bound_only", !c.x_min_exact}}) : ojson(nullptr);
            e["strict"] = to_string(c.strict);
            e["weak"] = to_string(c.weak);
            cs.push_back(e);
        }
        out.push_back({{"arc", poly_arc_json(a.arc)}, {"comparisons", cs}, {"falsified", a.falsified()}});
    }
    std::vector<std::string> warn{r.note};
    if (r.indeterminate) warn.push_back(std::to_string(r.indeterminate) + " comparisons indeterminate at leading order");
    ojson res = {{"falsified", r.falsified}, {"arcs", out}, {"indeterminate", r.indeterminate}};
    return report("valuative", ojson::object(), doc_canonical(family) + "\n" + arcs_doc.dump(), res, warn);
}

ojson cmd_b1d(const InputDocument& family, const CommandOptions& opt) {
    DeformationFamily D = to_family(family);
    CoordSet J;
    for (int j : opt.J) {
        if (j < 1 || j > D.n) throw InputError("b1d: index " + std::to_string(j) + " out of range");
        J.bits |= 1u << (j - 1);
    }
    B1dResult r = b1d_detector(D, J);
    ojson res;
    res["J"] = jset(J);
    res["witness"] = {{"point", jpoint(r.witness)}, {"support", jset(r.witness_support)}};
    res["found"] = r.found;
    std::vector<std::string> warn;
    if (r.found) {
        res["axis"] = r.axis + 1;
        res["beta"] = jpoint(r.beta);
        res["beta_in_base_support"] = r.beta_in_base;
    } else {
        ojson h;
        if (r.restriction->family) {
            std::vector<std::string> names = r.restriction->family->names();
            h["variables"] = r.restriction->family->x_names;
            h["polynomial"] = r.restriction->family->F.str(names);
        }
        h["apex_verdict"] = r.restriction->apex_verdict ? ojson(*r.restriction->apex_verdict) : ojson(nullptr);
        h["note"] = r.restriction->note;
        res["restriction"] = h;
        warn.push_back("pattern not found; the restriction to R^J must be mu-constant, which is not decided here");
    }
    return report("b1d", {{"J", opt.J}}, doc_canonical(family), res, warn);
}

}  // namespace nf
