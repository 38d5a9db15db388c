#pragma once

#include "crn/conservation.hpp"
#include "crn/criteria.hpp"
#include "crn/network.hpp"
#include "crn/oracle.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crn {

struct AnalysisOptions {
    std::optional<DetMethod> method;  // unset: subset expansion when it fits the budget
    std::uint64_t budget = kDefaultBudget;
    bool want_determinant = false;
    bool want_degeneracy = false;
    bool want_open_closed = false;
    bool want_wsd = false;
    int oracle_trials = 0;  // 0 disables the oracle section
    std::uint64_t oracle_seed = 1;
};

struct AnalysisReport {
    Network net;
    Openness openness{};
    ReducedBasis basis;
    Verdict verdict{};
    DetMethod method_used{};
    std::uint64_t enumeration_pairs = 0;
    std::optional<Polynomial> determinant;
    std::optional<DegeneracyResult> degeneracy;
    std::optional<OpenClosedReport> open_closed;
    std::optional<WsdResult> wsd;
    std::optional<OracleReport> oracle;
    std::vector<std::pair<std::string, double>> timings_ms;
};

AnalysisReport analyze(Network net, const AnalysisOptions& options);

// Text and JSON renderings carry the same verdict and witnesses. Timings
// are omitted when with_timings is false so reruns are byte-identical.
std::string render_text(const AnalysisReport& rep, bool with_timings);
nlohmann::ordered_json render_json(const AnalysisReport& rep, bool with_timings);

// Process exit code: 0 injective, 2 not injective, 3 all degenerate.
int exit_code(const Verdict& v);

// Cap on how many monomials a printed determinant may carry.
inline constexpr int kDetPrintLimit = 10'000;

}  // namespace crn
