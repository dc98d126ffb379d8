#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fstruct/cli.hpp"
#include "fstruct/scalar.hpp"

int main(int argc, char** argv) {
    CLI::App app{"metric f-structure engine: classification, characteristic "
                 "connections with skew torsion, curvature and holonomy"};
    app.require_subcommand(1);

    std::string mode_flag;
    double tol = 1e-9;
    fstruct::CliOptions opt;

    auto add_common = [&](CLI::App* sub, bool allow_all) {
        sub->add_option("--example", opt.example,
                        "built-in example: u2 | u3 | h3 | h5 | h3t3 | product:<base>:<s>");
        sub->add_option("file", opt.file, "structure file (JSON)");
        sub->add_option("--mode", mode_flag, "arithmetic mode: exact | float");
        sub->add_option("--tol", tol, "comparison tolerance for float mode")
            ->capture_default_str();
        sub->add_option("--format", opt.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out, "write output to a file");
        if (allow_all) sub->add_flag("--all", opt.all, "run every catalog example");
    };

    CLI::App* classify = app.add_subcommand("classify", "validate and classify a structure");
    add_common(classify, false);
    CLI::App* report = app.add_subcommand("report", "full geometry report");
    add_common(report, false);
    CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
    add_common(verify, true);

    CLI11_PARSE(app, argc, argv);

    // default exact; FSTRUCT_MODE overrides the default; --mode beats both
    std::string mode = "exact";
    if (const char* env = std::getenv("FSTRUCT_MODE")) mode = env;
    if (!mode_flag.empty()) mode = mode_flag;
    if (mode == "float") {
        fstruct::set_arithmetic_mode(fstruct::Mode::floating);
    } else if (mode == "exact") {
        fstruct::set_arithmetic_mode(fstruct::Mode::exact);
    } else {
        std::cerr << "error: unknown mode '" << mode << "'\n";
        return 1;
    }
    fstruct::set_comparison_tolerance(tol);

    if (classify->parsed()) return fstruct::cmd_classify(opt, std::cout);
    if (report->parsed()) return fstruct::cmd_report(opt, std::cout);
    return fstruct::cmd_verify(opt, std::cout);
}
