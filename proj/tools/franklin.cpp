// Command-line surface: reproduce the norm table, compute single norms,
// run the nu=1 asymptotic sweep, and execute the verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "franklin/table.hpp"
#include "franklin/verify.hpp"

namespace {

int cmd_table(int n_max, const std::string& format, int digits, bool parallel) {
    const auto cells = franklin::compute_cells(n_max, parallel);
    if (format == "csv")
        std::cout << franklin::render_table_csv(cells, digits);
    else if (format == "json")
        std::cout << franklin::render_table_json(cells, digits);
    else
        std::cout << franklin::render_table_text(cells, digits);
    return 0;
}

int cmd_norm(int n, int nu, const std::string& format, int digits, bool verbose) {
    const franklin::NormReport rep = franklin::projection_norm(franklin::KnotConfig(n, nu));
    if (format == "csv")
        std::cout << franklin::render_norm_csv(rep, digits);
    else if (format == "json")
        std::cout << franklin::render_norm_json(rep, verbose, digits);
    else
        std::cout << franklin::render_norm_text(rep, verbose, digits);
    return 0;
}

int cmd_sweep(int nu, int n_max, int digits, bool parallel) {
    const auto points = franklin::asymptotic_sweep(nu, n_max, parallel);
    std::cout << franklin::render_sweep_csv(points, digits);
    return 0;
}

int cmd_verify(const std::string& level) {
    const auto results = franklin::run_verify(level == "full" ? franklin::VerifyLevel::full
                                                              : franklin::VerifyLevel::quick);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << "verify: " << r.name << ": " << (r.pass ? "PASS" : "FAIL");
        if (!r.pass) {
            std::cout << " -- " << r.detail;
            all_pass = false;
        }
        std::cout << '\n';
    }
    std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES detected") << '\n';
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator norms of orthogonal projections onto periodic "
                 "piecewise-linear spline spaces"};
    app.require_subcommand(1);

    int digits = 8;
    bool parallel = false;

    auto* table = app.add_subcommand("table", "norm table for N = 2..n-max");
    int table_n_max = 20;
    std::string table_format = "text";
    table->add_option("--n-max", table_n_max, "largest N")->required();
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    table->add_option("--digits", digits, "decimal places")->check(CLI::PositiveNumber);
    table->add_flag("--parallel", parallel, "compute rows concurrently");

    auto* norm = app.add_subcommand("norm", "single norm for a (n, nu) configuration");
    int norm_n = 0, norm_nu = 0;
    bool verbose = false;
    std::string norm_format = "text";
    norm->add_option("--n", norm_n, "number of coarse steps")->required();
    norm->add_option("--nu", norm_nu, "half-spaced band width")->required();
    norm->add_option("--format", norm_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    norm->add_option("--digits", digits, "decimal places")->check(CLI::PositiveNumber);
    norm->add_flag("--verbose", verbose, "print every kappa(j)");

    auto* sweep = app.add_subcommand("sweep", "norms and gamma gaps for increasing N");
    int sweep_nu = 1, sweep_n_max = 0;
    sweep->add_option("--nu", sweep_nu, "half-spaced band width")->required();
    sweep->add_option("--n-max", sweep_n_max, "largest N")->required();
    sweep->add_option("--digits", digits, "decimal places")->check(CLI::PositiveNumber);
    sweep->add_flag("--parallel", parallel, "compute points concurrently");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string level = "quick";
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*table) return cmd_table(table_n_max, table_format, digits, parallel);
        if (*norm) return cmd_norm(norm_n, norm_nu, norm_format, digits, verbose);
        if (*sweep) return cmd_sweep(sweep_nu, sweep_n_max, digits, parallel);
        if (*verify) return cmd_verify(level);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
