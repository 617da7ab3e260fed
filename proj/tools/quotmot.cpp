// Command-line front end: coefficient tables under any specialization, the
// identity cross-checks, and the Euler three-route table.
//
// Exit status: 0 on success, 1 when a verification check fails, 2 on usage
// errors.

#include "quotmot/quotmot.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Generating series of nested quotients of points on a smooth curve"};
    app.require_subcommand(1);

    int rank = 1;
    int depth = 1;
    int genus = 0;
    int cap = 5;
    std::string measure = "universal";
    std::string format = "text";

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-r,--rank", rank, "number of quotient steps")
            ->check(CLI::PositiveNumber);
        cmd->add_option("-d,--depth", depth, "nesting depth (number of formal variables)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("-g,--genus", genus, "genus of the curve, used by specializations")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("-N,--cap", cap, "truncation order per variable")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--measure", measure, "coefficient specialization")
            ->check(CLI::IsMember({"universal", "hodge_deligne", "signed_poincare", "euler"}));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* cmd_compute = app.add_subcommand("compute", "print the coefficient table");
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "cross-check all identities at the given size");
    CLI::App* cmd_euler_table =
        app.add_subcommand("euler-table", "Euler numbers along three independent routes");
    CLI::App* cmd_exp_check =
        app.add_subcommand("exp-check", "compare the exponential form against the product");
    for (CLI::App* cmd : {cmd_compute, cmd_verify, cmd_euler_table, cmd_exp_check})
        add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    quotmot::run_config rc;
    rc.rank = rank;
    rc.depth = depth;
    rc.genus = genus;
    rc.cap = cap;
    rc.measure = *quotmot::parse_measure(measure);
    rc.format = *quotmot::parse_format(format);

    try {
        if (*cmd_compute) return quotmot::run_compute(rc, std::cout);
        if (*cmd_verify) return quotmot::run_verify(rc, std::cout);
        if (*cmd_euler_table) return quotmot::run_euler_table(rc, std::cout);
        if (*cmd_exp_check) return quotmot::run_exp_check(rc, std::cout);
    } catch (const quotmot::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
