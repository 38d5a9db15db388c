#include "crn/criteria.hpp"
#include "crn/oracle.hpp"
#include "crn/rates.hpp"
#include "crn/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace crn;

std::optional<DetMethod> parse_method(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "subset") return DetMethod::SubsetExpansion;
    if (name == "elimination") return DetMethod::Elimination;
    if (name == "both") return DetMethod::Both;
    throw Error("--method must be subset, elimination or both");
}

int run_analyze(const std::string& path, bool as_json, const std::string& method_name,
                AnalysisOptions options, bool no_timing) {
    options.method = parse_method(method_name);
    AnalysisReport rep = analyze(parse_network_file(path), options);
    if (as_json)
        std::cout << render_json(rep, !no_timing).dump(2) << "\n";
    else
        std::cout << render_text(rep, !no_timing);
    return exit_code(rep.verdict);
}

int run_crosscheck(const std::string& path, int trials, std::uint64_t seed,
                   const std::string& golden_path, std::uint64_t budget) {
    const Network net = parse_network_file(path);
    const ReducedBasis basis = reduced_conservation_basis(net);
    const VarNames names = var_names(net);
    bool ok = true;

    Polynomial determinant;
    try {
        determinant = det_extended_jacobian(net, basis, DetMethod::Both, budget);
        std::cout << "determinant methods: agree (" << determinant.monomial_count() << " monomials)\n";
    } catch (const BudgetExceeded&) {
        determinant = det_extended_jacobian(net, basis, DetMethod::Elimination);
        std::cout << "determinant methods: elimination only (enumeration over budget)\n";
    }

    if (classify_openness(net).cls == OpennessClass::Closed) {
        const auto [lhs, rhs] = det_fully_open_relation(net);
        const bool equal = lhs == rhs;
        std::cout << "fully-open determinant identity: " << (equal ? "holds" : "FAILS") << "\n";
        ok = ok && equal;
        const int s = classify_openness(net).s;
        Polynomial truncated = lhs.rate_degree_part(s);
        if (basis.d % 2 == 1) truncated = -truncated;
        const bool trunc_equal = truncated == determinant;
        std::cout << "degree-s truncation: " << (trunc_equal ? "matches" : "FAILS") << "\n";
        ok = ok && trunc_equal;
    } else {
        std::cout << "fully-open determinant identity: n/a (network is open)\n";
    }

    const OracleReport oracle = random_eval_crosscheck(net, trials, seed);
    std::cout << "oracle: " << oracle.passes << "/" << oracle.trials << " trials passed\n";
    for (const auto& f : oracle.failures) std::cout << "  " << f << "\n";
    ok = ok && oracle.ok();

    if (!golden_path.empty()) {
        std::ifstream in(golden_path);
        if (!in) throw Error("cannot open golden file: " + golden_path);
        std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        while (!expected.empty() && (expected.back() == '\n' || expected.back() == '\r'))
            expected.pop_back();
        const std::string actual = render(determinant, names);
        if (expected == actual) {
            std::cout << "golden determinant: matches\n";
        } else {
            std::cout << "golden determinant: MISMATCH\n";
            std::cout << "  expected: " << expected << "\n";
            std::cout << "  actual:   " << actual << "\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact injectivity analysis of mass-action reaction networks"};
    app.require_subcommand(1);

    std::string file, method_name, golden;
    bool as_json = false, no_timing = false;
    AnalysisOptions options;
    int trials = 100;
    std::uint64_t seed = 1;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze a network file");
    analyze_cmd->add_option("file", file, "network file")->required();
    analyze_cmd->add_flag("--json", as_json, "emit a JSON report");
    analyze_cmd->add_flag("--det", options.want_determinant, "include the determinant");
    analyze_cmd->add_option("--method", method_name, "subset | elimination | both");
    analyze_cmd->add_option("--budget", options.budget, "max (R,I) pairs for subset enumeration");
    analyze_cmd->add_flag("--degeneracy", options.want_degeneracy, "run the degeneracy check");
    analyze_cmd->add_flag("--open-closed", options.want_open_closed, "relate to the fully open closure");
    analyze_cmd->add_flag("--wsd", options.want_wsd, "run the weak-sign-determination check");
    analyze_cmd->add_option("--oracle", options.oracle_trials, "random evaluation cross-check trials");
    analyze_cmd->add_option("--seed", options.oracle_seed, "seed for the oracle sampler");
    analyze_cmd->add_flag("--no-timing", no_timing, "omit timings (byte-identical reruns)");

    CLI::App* crosscheck_cmd = app.add_subcommand("crosscheck", "verify a file with independent routes");
    crosscheck_cmd->add_option("file", file, "network file")->required();
    crosscheck_cmd->add_option("--trials", trials, "oracle trials");
    crosscheck_cmd->add_option("--seed", seed, "oracle seed");
    crosscheck_cmd->add_option("--golden", golden, "file with the expected canonical determinant");
    std::uint64_t crosscheck_budget = crn::kDefaultBudget;
    crosscheck_cmd->add_option("--budget", crosscheck_budget, "max (R,I) pairs for subset enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here with exit code 0; anything else is a usage error.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(file, as_json, method_name, options, no_timing);
        return run_crosscheck(file, trials, seed, golden, crosscheck_budget);
    } catch (const crn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
