// Command-line front end: descriptor reports and the verification suites.
//
// Exit codes: 0 pass, 1 check failure, 2 input error, 3 internal error.

#include <CLI11.hpp>
#include <iostream>

#include "gjsum/errors.hpp"
#include "gjsum/report.hpp"
#include "gjsum/verify.hpp"

namespace {

int run_report_cmd(const std::string& input, const std::string& format, unsigned cap) {
    gjsum::Descriptor d = gjsum::parse_descriptor_file(input);
    gjsum::Report r = gjsum::run_report(d, cap);
    std::cout << (format == "structured" ? r.structured : r.text);
    return r.all_checks_passed ? 0 : 1;
}

int run_verify_cmd(const std::string& suite, long max_order, const std::string& format,
                   unsigned cap) {
    gjsum::SuiteResult r = gjsum::run_suite(suite, max_order, cap);
    if (format == "structured") {
        std::cout << "{\"suite\":\"" << r.name << "\",\"passed\":" << (r.passed() ? "true" : "false")
                  << ",\"checks\":" << r.checks << ",\"failures\":" << r.failures.size() << "}\n";
    } else {
        std::cout << r.summary() << "\n";
        for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
        for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
    }
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Adams operations, ramification invariants and "
                 "tame Galois-Gauss/Jacobi sums"};
    app.require_subcommand(1);

    std::string input, format = "text", suite;
    long max_order = 0;
    unsigned precision_cap = 4096;

    CLI::App* report = app.add_subcommand("report", "invariant report for a descriptor file");
    report->add_option("--input", input, "descriptor file (JSON)")->required();
    report->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    report->add_option("--precision-cap", precision_cap, "sign refinement precision cap in bits");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--max-order", max_order, "largest group order for corpus suites");
    verify->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--precision-cap", precision_cap, "sign refinement precision cap in bits");

    try {
        app.parse(argc, argv);
        if (report->parsed()) return run_report_cmd(input, format, precision_cap);
        return run_verify_cmd(suite, max_order, format, precision_cap);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const gjsum::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const gjsum::check_failure& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const gjsum::internal_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
