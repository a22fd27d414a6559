// Acceptance runner: one [PASS]/[FAIL] line per criterion.

#include "../unit/property_suites.hpp"
#include "newtonfan/report.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nf;
using oracle::P;
using oracle::Q;

namespace {

using Terms = std::vector<std::pair<std::vector<int>, Rat>>;

struct Check {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

int failures = 0;

void run(int id, const std::string& title, double budget_seconds, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) c.problems.push_back("took " + std::to_string(secs) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (c.problems.empty()) {
        line << "[PASS] criterion " << id << ": " << title << " (" << secs << " s)";
    } else {
        ++failures;
        line << "[FAIL] criterion " << id << ": " << title << " (" << secs << " s): " << c.problems.front();
        if (c.problems.size() > 1) line << " (+" << c.problems.size() - 1 << " more)";
    }
    std::cout << line.str() << std::endl;
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(NF_TEST_DATA) + "/" + name);
    if (!in) throw InputError("missing test data " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

InputDocument load(const std::string& name) { return parse_input(slurp(name), name); }

DeformationFamily family(int n, int m, const Terms& ts) { return make_family(n, m, Poly::from_terms(n + m, ts)); }

SupportSet bs_base(long l) { return make_support({P({5 * l, 0, 0}), P({0, 7 * l, 1}), P({0, 0, 15}), P({0, 8 * l, 0})}); }
SupportSet bs_generic(long l) { return augment(bs_base(l), {P({l, 6 * l, 0})}); }

DeformationFamily bs_family() {
    return family(3, 1, {{{5, 0, 0, 0}, 1}, {{0, 7, 1, 0}, 1}, {{0, 0, 15, 0}, 1}, {{0, 8, 0, 0}, 1}, {{1, 6, 0, 1}, 1}});
}

std::string str(const Rat& r) { return to_string(r); }

void criterion1(Check& c) {
    for (long a = 2; a <= 6; ++a)
        for (long b = 2; b <= 6; ++b) {
            Rat nu = newton_number_set(make_support({P({a, 0}), P({0, b})}));
            c.expect(nu == (a - 1) * (b - 1), "ν(x^" + std::to_string(a) + "+y^" + std::to_string(b) + ") = " + str(nu));
        }
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b)
            for (int k = 2; k <= 4; ++k) {
                long want = long(a - 1) * (b - 1) * (k - 1);
                Rat nu = newton_number_set(make_support({P({a, 0, 0}), P({0, b, 0}), P({0, 0, k})}));
                auto mu = milnor_number(Poly::from_terms(3, {{{a, 0, 0}, 1}, {{0, b, 0}, 1}, {{0, 0, k}, 1}})).mu;
                std::string tag = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k);
                c.expect(nu == want, "ν Brieskorn " + tag + " = " + str(nu));
                c.expect(mu && *mu == want, "μ Brieskorn " + tag);
            }
}

void criterion2(Check& c) {
    for (Rat a : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
        auto S = make_support({P({2, 0}), P({0, 2}), Point{Rat(3, 2) * (1 - a), 2 * a}});
        auto Sa = augment(S, {Q({"3/2", "0"})});
        Rat nu = newton_number_set(S), nua = newton_number_set(Sa);
        c.expect(nu == a, "ν(S) at a=" + str(a) + " is " + str(nu));
        c.expect(nua == Rat(1, 2), "ν(S(α)) at a=" + str(a) + " is " + str(nua));
        c.expect(nu == oracle::nu_2d(S.points) && nua == oracle::nu_2d(Sa.points), "polygon oracle at a=" + str(a));
        c.expect((nu == nua) == (a == Rat(1, 2)), "equality pattern at a=" + str(a));
        c.expect(mu_constant_test(S, Sa).verdict == (nu == nua), "apex verdict at a=" + str(a));
    }
}

void criterion3(Check& c) {
    for (Rat a : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
        auto S = make_support({P({1, 0, 0}), P({0, 2, 0}), Point{Rat(3, 4) * (1 - a), 2 * a, 0}, P({0, 0, 1})});
        auto Sa = augment(S, {Q({"3/4", "0", "0"})});
        c.expect(newton_number_set(S) == newton_number_set(Sa), "ν differs at a=" + str(a));
        auto cert = find_apex(S, Sa, Q({"3/4", "0", "0"}));
        bool found = false;
        if (cert)
            for (const auto& cand : cert->candidates)
                if (cand.good && cand.beta == P({0, 0, 1})) found = true;
        c.expect(found, "good apex (0,0,1) missing at a=" + str(a));
    }
}

void criterion4(Check& c) {
    auto S = bs_base(1), Sp = bs_generic(1);
    c.expect(verd(S, Sp) == std::vector<Point>{P({1, 6, 0})}, "Verd");
    auto cert = find_apex(S, Sp, P({1, 6, 0}));
    c.expect(cert && cert->good && cert->beta == P({0, 7, 1}) && cert->axis == 2, "apex (0,7,1) with i = 3");
    c.expect(newton_number_set(S) == newton_number_set(Sp), "ν(f) = ν(F_s)");
    for (long l : {1L, 2L}) {
        auto r = mu_constant_test(bs_base(l), bs_generic(l));
        c.expect(r.verdict && r.nu_s == r.nu_s_prime, "F^λ for λ = " + std::to_string(l));
        Terms ts;
        for (const auto& p : bs_generic(l).points)
            ts.push_back({{int(p[0].get_num().get_si()), int(p[1].get_num().get_si()), int(p[2].get_num().get_si())}, 1});
        c.expect(nondegeneracy_check(Poly::from_terms(3, ts)).nondegenerate(), "F^λ non-degenerate for λ = " + std::to_string(l));
    }
}

void suite(Check& c, const suites::Outcome& o, int at_least, const std::string& name) {
    c.expect(o.cases >= at_least, name + ": only " + std::to_string(o.cases) + " cases");
    c.expect(o.failures == 0, name + ": " + std::to_string(o.failures) + " failures, first: " + o.first_failure);
}

void criterion7(Check& c) {
    auto D = bs_family();
    auto R = simultaneous_resolution(D);
    auto Gp = gamma_plus(generic_support(D));
    c.expect(check_admissible(R.fan, Gp).admissible, "admissibility");
    c.expect(R.count(ChartStatus::unchecked) == 0, "unchecked charts");
    c.expect(R.count(ChartStatus::failed) == 0, "failed charts");
    int verd_charts = 0;
    for (const auto& ch : R.charts) {
        c.expect(abs(det(ch.chart.gens)) == 1, "cone with |det| != 1");
        for (std::size_t k = 0; k < ch.chart.gens.size(); ++k)
            c.expect(Rat(ch.transform.m[k]) == Gp.support_value(ch.chart.gens[k]), "m differs from the support function");
        if (!ch.verd_vertex) continue;
        ++verd_charts;
        const int n = D.n, m = D.m, last = static_cast<int>(ch.chart.gens.size()) - 1;
        Poly c0 = y_coefficient(ch.transform.Fbar, n, m, std::vector<int>(n, 0));
        std::vector<int> e(n, 0);
        e[last] = 1;
        Poly c1 = y_coefficient(ch.transform.Fbar, n, m, e);
        c.expect(!c0.is_zero() && c0.constant_term() == 0, "c0(0) = 0 with c0 nonzero");
        c.expect(c1.constant_term() != 0, "c1(0) != 0");
        c.expect(ch.normal_form, "normal form flag");
    }
    c.expect(verd_charts > 0, "no chart at the Verd cone");
}

void criterion8(Check& c) {
    auto deg = to_family(load("degenerate_family.json"));
    auto b = b1d_detector(deg, CoordSet::of({0, 1}));
    c.expect(b.found && b.beta == P({2, 2, 1}) && !b.beta_in_base, "b1d β = (2,2,1)");
    auto cubic = family(2, 1, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{1, 1, 1}, 1}});
    c.expect(valuative_falsifier(cubic, {make_arc({1, 1}, {1})}).falsified, "x³+y³+sxy not falsified");
    auto grid = valuative_falsifier(bs_family(), arc_grid(3, 1, 3, {1}), 4);
    c.expect(grid.arcs.size() == 27 && !grid.falsified, "violation on the Briançon–Speder grid");
}

void criterion9(Check& c) {
    std::vector<std::pair<std::string, Poly>> corpus;
    auto add = [&](const std::string& name, int n, const Terms& ts) { corpus.push_back({name, Poly::from_terms(n, ts)}); };
    for (const char* f : {"x2_y3.json", "x3_y3.json", "x2_2xy_y2.json"}) corpus.push_back({f, to_polynomial(load(f))});
    for (const char* f : {"bs_family.json", "degenerate_family.json", "x3_y3_sxy.json", "x2_y2_family.json"})
        corpus.push_back({std::string(f) + " (base)", base_polynomial(to_family(load(f)))});
    add("x^2+2xy+y^2+x^5+y^5", 2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}, {{5, 0}, 1}, {{0, 5}, 1}});
    add("x^4+x^2y^2+y^4", 2, {{{4, 0}, 1}, {{2, 2}, 1}, {{0, 4}, 1}});
    add("x^2y+y^4", 2, {{{2, 1}, 1}, {{0, 4}, 1}});
    add("x^3+xy^3", 2, {{{3, 0}, 1}, {{1, 3}, 1}});
    add("x^2+y^2+z^2+xyz", 3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{1, 1, 1}, 1}});
    add("x^3+y^3+z^3", 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
    add("x^2+y^3+z^4+xy^2", 3, {{{2, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 4}, 1}, {{1, 2, 0}, 1}});
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) add("Brieskorn", 2, {{{a, 0}, 1}, {{0, b}, 1}});
    int completed = 0;
    for (const auto& [name, f] : corpus) {
        KouchnirenkoReport r;
        try {
            r = kouchnirenko_crosscheck(f, 400000, 64);
        } catch (const BudgetExceeded&) {
            std::cout << "  note: " << name << " exceeds the Groebner budget, compared on ν only\n";
            continue;
        }
        if (!r.mu) {
            std::cout << "  note: " << name << " has no stable Milnor number (" << r.note << ")\n";
            continue;
        }
        ++completed;
        c.expect(r.inequality_holds, name + ": μ < ν");
        if (r.equality_expected) c.expect(r.equality_holds, name + ": non-degenerate but μ != ν");
    }
    c.expect(completed >= 30, "only " + std::to_string(completed) + " instances completed");
}

void criterion10(Check& c) {
    auto reports = [](int threads) {
        CommandOptions o;
        o.threads = threads;
        std::string all;
        all += render(cmd_nu(load("edge2d_a12.json"), o), false);
        all += render(cmd_mu_test(load("bs_base.json"), load("bs_deformed.json"), o), false);
        all += render(cmd_resolve(load("bs_family.json"), o), false);
        all += render(cmd_fan(load("square.json"), o), false);
        all += render(cmd_milnor(load("x2_y3.json"), o), false);
        all += render(cmd_nondeg(load("x2_2xy_y2.json"), o), false);
        all += render(cmd_valuative(load("bs_family.json"), parse_json(slurp("arcs_grid3.json")), o), false);
        CommandOptions jb = o;
        jb.J = {1, 2};
        all += render(cmd_b1d(load("degenerate_family.json"), jb), false);
        return all;
    };
    std::string a = reports(1), b = reports(1), d = reports(4);
    c.expect(a == b, "repeated runs differ");
    c.expect(a == d, "thread count changes the reports");
}

}  // namespace

int main() {
    run(1, "Brieskorn grid, ν and μ", 60, criterion1);
    run(2, "two-dimensional edge sweep", 5, criterion2);
    run(3, "three-dimensional edge sweep", 5, criterion3);
    run(4, "Briançon–Speder apex and scaled families", 30, criterion4);
    run(5, "good apex iff equal ν (randomized)", 600,
        [](Check& c) { suite(c, suites::apex_equivalence(5005, 200), 200, "equivalence"); });
    run(6, "monotonicity, homothety, interior drop (randomized)", 600, [](Check& c) {
        suite(c, suites::monotonicity(6006, 100), 100, "monotonicity");
        suite(c, suites::homothety(6106, 60), 60, "homothety");
        suite(c, suites::interior_drop(6206, 60), 60, "interior drop");
    });
    run(7, "Briançon–Speder simultaneous resolution", 300, criterion7);
    run(8, "degenerate analysis and arc falsifier", 120, criterion8);
    run(9, "Kouchnirenko inequality on the corpus", 600, criterion9);
    run(10, "deterministic reports", 300, criterion10);
    return failures == 0 ? 0 : 1;
}
