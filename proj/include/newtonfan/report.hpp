#pragma once
// Command layer shared by the CLI and the acceptance runner: each command turns
// parsed inputs into a report document with a fixed field order.

#include "io.hpp"

namespace nf {

struct CommandOptions {
    bool series = false;
    long cap = 64;
    bool skip_smoothness = false;
    long budget = 200000;
    int threads = 1;  // never echoed, reports must not depend on it
    bool emit_polytope = false;
    std::string nondeg_mode = "exact-low-dim";
    std::vector<int> J;  // 1-based, for b1d
};

ojson cmd_nu(const InputDocument& doc, const CommandOptions& opt);
ojson cmd_mu_test(const InputDocument& base, const std::optional<InputDocument>& deformed, const CommandOptions& opt);
ojson cmd_resolve(const InputDocument& family, const CommandOptions& opt);
ojson cmd_fan(const InputDocument& doc, const CommandOptions& opt);
// Either a support/terms document (its Newton fan is refined) or a {"fan": ...} document.
ojson cmd_regularize(const ojson& raw, const CommandOptions& opt);
ojson cmd_milnor(const InputDocument& doc, const CommandOptions& opt);
ojson cmd_nondeg(const InputDocument& doc, const CommandOptions& opt);
ojson cmd_valuative(const InputDocument& family, const ojson& arcs, const CommandOptions& opt);
ojson cmd_b1d(const InputDocument& family, const CommandOptions& opt);

// Error document for the exit-code contract: 2 input, 3 precondition, 4 budget, 1 internal.
int exit_code_for(const std::exception& e);
ojson error_report(const std::string& command, const std::exception& e);

std::string render(const ojson& report, bool pretty);
std::string digest(const std::string& canonical);

}  // namespace nf
