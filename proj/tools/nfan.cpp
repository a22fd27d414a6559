// nfan: Newton numbers, mu-constancy certificates and toric resolutions from the command line.

#include "newtonfan/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nf::InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nf::InputDocument load(const std::string& path) { return nf::parse_input(read_file(path), path); }

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> r;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            r.push_back(v);
        } catch (const std::exception&) {
            throw nf::InputError("bad index list '" + s + "'");
        }
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton polyhedra, Newton numbers and toric simultaneous resolutions"};
    app.require_subcommand(1);
    app.fallthrough();
    nf::CommandOptions opt;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indented output");
    app.add_option("--threads", opt.threads, "Worker threads for chart and arc workloads")->check(CLI::Range(1, 256));

    std::string file, file2, arcs, J;
    auto* nu = app.add_subcommand("nu", "Newton number and volume vector of a support set");
    nu->add_option("file", file, "Support or terms document")->required();
    nu->add_flag("--series", opt.series, "Use the stabilizing series (non-convenient supports)");
    nu->add_option("--cap", opt.cap, "Largest m used by --series")->check(CLI::PositiveNumber);
    nu->add_flag("--emit-polytope", opt.emit_polytope, "Include vertices and facets of the Newton polyhedron");

    auto* mu = app.add_subcommand("mu-test", "Good-apex test for mu-constancy");
    mu->add_option("base", file, "Base support, or a family document")->required();
    mu->add_option("deformed", file2, "Deformed support (omit for a family document)");
    mu->add_flag("--emit-polytope", opt.emit_polytope, "Include both Newton polyhedra");

    auto* res = app.add_subcommand("resolve", "Simultaneous toric resolution of a family");
    res->add_option("family", file, "Terms document with parameters")->required();
    res->add_flag("--skip-smoothness", opt.skip_smoothness, "Skip the per-chart smoothness check");
    res->add_option("--budget", opt.budget, "Groebner step budget")->check(CLI::PositiveNumber);
    res->add_option("--nondeg-mode", opt.nondeg_mode, "exact-low-dim | groebner | skip-high-faces");

    auto* fan = app.add_subcommand("fan", "Newton fan of a support set");
    fan->add_option("file", file)->required();
    fan->add_flag("--emit-polytope", opt.emit_polytope);

    auto* reg = app.add_subcommand("regularize", "Regular refinement of a fan or of a Newton fan");
    reg->add_option("file", file)->required();
    reg->add_option("--budget", opt.budget, "Stellar subdivision step budget")->check(CLI::PositiveNumber);

    auto* mil = app.add_subcommand("milnor", "Milnor number by standard monomials");
    mil->add_option("file", file, "Terms document without parameters")->required();
    mil->add_option("--budget", opt.budget)->check(CLI::PositiveNumber);
    mil->add_option("--cap", opt.cap)->check(CLI::PositiveNumber);

    auto* nd = app.add_subcommand("nondeg", "Newton non-degeneracy face by face");
    nd->add_option("file", file)->required();
    nd->add_option("--mode", opt.nondeg_mode, "exact-low-dim | groebner | skip-high-faces");
    nd->add_option("--budget", opt.budget)->check(CLI::PositiveNumber);

    auto* val = app.add_subcommand("valuative", "Arc falsifier for mu-constancy");
    val->add_option("family", file)->required();
    val->add_option("--arcs", arcs, "Arcs document")->required();

    auto* b1d = app.add_subcommand("b1d", "Support pattern on the complement of J");
    b1d->add_option("family", file)->required();
    b1d->add_option("--J", J, "Comma separated 1-based indices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        nf::ojson out;
        if (name == "nu") out = nf::cmd_nu(load(file), opt);
        else if (name == "mu-test")
            out = nf::cmd_mu_test(load(file), file2.empty() ? std::nullopt : std::optional(load(file2)), opt);
        else if (name == "resolve") out = nf::cmd_resolve(load(file), opt);
        else if (name == "fan") out = nf::cmd_fan(load(file), opt);
        else if (name == "regularize") out = nf::cmd_regularize(nf::parse_json(read_file(file), file), opt);
        else if (name == "milnor") out = nf::cmd_milnor(load(file), opt);
        else if (name == "nondeg") out = nf::cmd_nondeg(load(file), opt);
        else if (name == "valuative") out = nf::cmd_valuative(load(file), nf::parse_json(read_file(arcs), arcs), opt);
        else {
            opt.J = parse_index_list(J);
            out = nf::cmd_b1d(load(file), opt);
        }
        std::cout << nf::render(out, pretty);
        for (const auto& w : out["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << nf::render(nf::error_report(name, e), pretty);
        return nf::exit_code_for(e);
    }
}
