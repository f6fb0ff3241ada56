// Command-line front end: quotient bases, iterated Hochschild dimensions,
// closed-form Poincare polynomials and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 truncation-reliability error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "chh/checks.hpp"
#include "chh/kdef.hpp"
#include "chh/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncation = 3;

void printReport(const chh::Report& report) {
    if (report.config.format == "json")
        std::cout << chh::renderJson(report) << "\n";
    else
        std::cout << chh::renderTable(report);
}

int runVerify(const std::string& suite) {
    std::vector<chh::CheckResult> results;
    auto append = [&results](std::vector<chh::CheckResult> more) {
        results.insert(results.end(), more.begin(), more.end());
    };
    if (suite == "paper-examples" || suite == "all") append(chh::paperExampleChecks());
    if (suite == "identities" || suite == "all") append(chh::identityChecks());
    if (suite == "cross-check" || suite == "all") append(chh::crossCheckChecks(8));
    if (results.empty()) throw chh::UsageError("verify: unknown suite '" + suite + "'");

    int failed = 0;
    for (const chh::CheckResult& r : results) {
        if (r.pass) {
            std::cout << "PASS: " << r.name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL: " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
    }
    std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
              << "\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hochschild homology of charged algebras and the U(2) "
                 "representation-variety Poincare polynomials"};
    app.require_subcommand(1);

    chh::RunConfig cfg;
    std::string suite = "all";

    CLI::App* basis = app.add_subcommand("basis", "quotient-algebra dimensions and monomials");
    basis->add_option("--s", cfg.s, "free group rank");
    basis->add_option("--charge", cfg.charge, "charge (0-2)");
    basis->add_option("--max-degree", cfg.maxDegree, "top degree");
    basis->add_option("--format", cfg.format, "json|table")->check(CLI::IsMember({"json", "table"}));
    basis->add_flag("--monomials", cfg.showMonomials, "list basis monomials");

    CLI::App* hh = app.add_subcommand("hh", "iterated Hochschild homology dimensions");
    hh->add_option("--s", cfg.s, "free group rank");
    hh->add_option("--r", cfg.r, "torus rank");
    hh->add_option("--charge", cfg.charge, "charge (0-2)");
    hh->add_option("--max-degree", cfg.maxDegree, "top degree");
    hh->add_option("--method", cfg.method, "complex|formula|closed-form")
        ->check(CLI::IsMember({"complex", "formula", "closed-form"}));
    hh->add_option("--format", cfg.format, "json|table")->check(CLI::IsMember({"json", "table"}));

    CLI::App* poincare = app.add_subcommand("poincare", "closed-form Poincare polynomials");
    poincare->add_option("--target", cfg.target, "hom-u2|rep-f2-u2")
        ->required()
        ->check(CLI::IsMember({"hom-u2", "rep-f2-u2"}));
    poincare->add_option("--s", cfg.s, "free group rank");
    poincare->add_option("--r", cfg.r, "torus rank");
    CLI::Option* maxDegOpt = poincare->add_option("--max-degree", cfg.maxDegree, "truncation");
    poincare->add_option("--format", cfg.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "paper-examples|identities|cross-check|all")
        ->check(CLI::IsMember({"paper-examples", "identities", "cross-check", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (basis->parsed()) {
            cfg.command = "basis";
            printReport(chh::runBasis(cfg));
        } else if (hh->parsed()) {
            cfg.command = "hh";
            printReport(chh::runHH(cfg));
        } else if (poincare->parsed()) {
            cfg.command = "poincare";
            cfg.maxDegreeSet = maxDegOpt->count() > 0;
            printReport(chh::runPoincare(cfg));
        } else if (verify->parsed()) {
            return runVerify(suite);
        }
    } catch (const chh::TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const chh::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chh::UnsupportedCharge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
