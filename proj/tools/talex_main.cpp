#include <iostream>

#include "CLI11.hpp"
#include "talex/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact twisted Alexander polynomial and Reidemeister torsion toolkit"};
    app.require_subcommand(1);

    talex::RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool wants_input, bool wants_rep) {
        if (wants_input) {
            sub->add_option("--knot", cfg.knot, "built-in knot or link table name");
            sub->add_option("--presentation", cfg.presentation_path,
                            "path to a group presentation file");
        }
        if (wants_rep)
            sub->add_option("--rep", cfg.rep_path, "path to a representation file");
        sub->add_option("--field", cfg.field,
                        "coefficient field when no representation file is given (Q, Qi, Fp:<p>)");
        sub->add_option("--jobs", cfg.jobs, "worker threads for corpus commands");
        sub->add_option("--out", cfg.out_path, "also write the JSON report to this path");
        sub->add_flag("--json", cfg.json_output, "print the report as JSON instead of text");
    };

    auto* compute = app.add_subcommand("compute", "twisted Alexander invariant of a presentation");
    add_common(compute, true, true);
    auto* orders = app.add_subcommand("orders", "zeroth and first Alexander orders and their ratio");
    add_common(orders, true, true);
    auto* sym = app.add_subcommand("check-symmetry", "verify the duality/symmetry unit equation");
    add_common(sym, true, true);
    auto* par = app.add_subcommand("check-parity", "verify the degree parity bound");
    add_common(par, true, true);
    auto* pal = app.add_subcommand("palindrome", "palindromic normal form of the invariant");
    add_common(pal, true, true);
    auto* enu = app.add_subcommand("enumerate", "enumerate SL(2,Fp) representations and invariants");
    add_common(enu, true, false);
    enu->add_option("--prime", cfg.prime, "prime p for the SL(2,Fp) enumeration");
    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    add_common(selftest, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int parse_code = app.exit(e);
        return parse_code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return talex::run(cfg, std::cout);
}
