// hopfrep: construct finitely presented bialgebras and Hopf algebras, run
// commutative-diagram checks on truncated monomial bases, and build induced
// representations from quantum subgroups.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "hopfrep/errors.hpp"
#include "hopfrep/runner.hpp"

namespace {

int emit(const hopfrep::RunOutcome& outcome, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << outcome.rendered;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << output_path << "\n";
            return 2;
        }
        out << outcome.rendered;
    }
    return outcome.exit_code;
}

void add_common_flags(CLI::App* cmd, hopfrep::CheckRequest& req, std::string& output,
                      std::string& oracle) {
    cmd->add_option("-d,--degree", req.degree, "truncation degree for test bases");
    cmd->add_option("--expect", req.expect, "expected verdict: pass or fail")
        ->check(CLI::IsMember({"pass", "fail"}));
    cmd->add_option("--format", req.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output,--report", output, "write the report to a file");
    cmd->add_option("--oracle", oracle, "dense-oracle evaluation point q0 (rational, e.g. 2 or 3/2)");
    cmd->add_option("--seed", req.seed, "seed for randomized property suites (reserved)");
    cmd->add_option("--pi", req.pi_path, "projection map file for subgroup/induce");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic Hopf-algebra diagram checker"};
    app.require_subcommand(1);

    hopfrep::CheckRequest req;
    std::string output;
    std::string oracle = "2";

    CLI::App* check = app.add_subcommand("check", "run a named check on an instance");
    check->add_option("name", req.check,
                      "axioms | module | comodule | hopf-module | hopf-rep-1 | hopf-rep-2 | "
                      "hopf-rep | subgroup | induce | confluence | oracle")
        ->required();
    check->add_option("instance", req.instances,
                      "catalog name (eq2, ak, cyclic:<n>, example-2.6.2:<alg>) or .hp file");
    add_common_flags(check, req, output, oracle);

    CLI::App* induce = app.add_subcommand("induce", "build and verify an induced representation");
    std::string algebra, subgroup;
    induce->add_option("--algebra", algebra, "the big algebra (catalog name or .hp file)")
        ->required();
    induce->add_option("--subgroup", subgroup, "the quotient bialgebra (catalog name or .hp file)")
        ->required();
    induce->add_option("--module", req.module_name, "module over the subgroup (trivial)");
    add_common_flags(induce, req, output, oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (induce->parsed()) {
        req.check = "induce";
        req.instances = {algebra, subgroup};
    }

    try {
        std::size_t slash = oracle.find('/');
        if (slash == std::string::npos) {
            req.oracle_q0 = hopfrep::Rational(oracle);
        } else {
            req.oracle_q0 = hopfrep::Rational(oracle.substr(0, slash)) /
                            hopfrep::Rational(oracle.substr(slash + 1));
        }
        req.oracle_q0.canonicalize();

        auto start = std::chrono::steady_clock::now();
        hopfrep::RunOutcome outcome = hopfrep::run_check(req);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        // Timing goes to stderr so report bytes stay deterministic.
        std::cerr << "elapsed: " << elapsed << " ms\n";
        return emit(outcome, output);
    } catch (const hopfrep::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hopfrep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
