#include "crn/report.hpp"

#include "crn/rates.hpp"

#include <chrono>
#include <sstream>

namespace crn {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string render_omega(const Network& net, const ReducedBasis& basis, int row) {
    std::string out;
    const auto v = basis.omega_original(row);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (out.empty()) {
            if (v[i] < 0) out += "-";
        } else {
            out += v[i] < 0 ? " - " : " + ";
        }
        const Rat mag = v[i] < 0 ? Rat(-v[i]) : v[i];
        if (mag != 1) out += to_string(mag) + " ";
        out += net.species_at(static_cast<int>(i)).name;
    }
    return out.empty() ? "0" : out;
}

std::string render_witness(const Network& net, const SubsetWitness& w) {
    std::string out = "reactions {";
    for (size_t i = 0; i < w.reactions.size(); ++i)
        out += (i ? ", " : "") + net.reaction_at(w.reactions[i]).rate_label;
    out += "}, removed species {";
    for (size_t i = 0; i < w.removed_species.size(); ++i)
        out += (i ? ", " : "") + net.species_at(w.removed_species[i]).name;
    out += "}, value " + to_string(w.value);
    return out;
}

nlohmann::ordered_json witness_json(const Network& net, const SubsetWitness& w) {
    nlohmann::ordered_json j;
    j["reactions"] = nlohmann::ordered_json::array();
    for (int r : w.reactions) j["reactions"].push_back(net.reaction_at(r).rate_label);
    j["removed_species"] = nlohmann::ordered_json::array();
    for (int i : w.removed_species) j["removed_species"].push_back(net.species_at(i).name);
    j["value"] = to_string(w.value);
    return j;
}

nlohmann::ordered_json verdict_json(const Network& net, const Verdict& v) {
    nlohmann::ordered_json j;
    switch (v.kind) {
        case Verdict::Kind::Injective:
            j["kind"] = "injective";
            j["sign"] = v.det_sign;
            break;
        case Verdict::Kind::NotInjective:
            j["kind"] = "not_injective";
            j["witnesses"]["positive"] = witness_json(net, *v.positive);
            j["witnesses"]["negative"] = witness_json(net, *v.negative);
            break;
        case Verdict::Kind::AllDegenerate: j["kind"] = "all_degenerate"; break;
    }
    return j;
}

const char* method_name(DetMethod m) {
    switch (m) {
        case DetMethod::SubsetExpansion: return "subset-expansion";
        case DetMethod::Elimination: return "elimination";
        case DetMethod::Both: return "both";
    }
    return "?";
}

}  // namespace

AnalysisReport analyze(Network net, const AnalysisOptions& options) {
    AnalysisReport rep;
    rep.net = std::move(net);
    auto timed = [&](const char* label, auto&& fn) {
        const auto start = Clock::now();
        fn();
        rep.timings_ms.push_back({label, ms_since(start)});
    };

    timed("classify", [&] {
        rep.openness = classify_openness(rep.net);
        rep.basis = reduced_conservation_basis(rep.net);
        rep.enumeration_pairs = enumeration_size(rep.net);
    });

    rep.method_used = options.method.value_or(rep.enumeration_pairs <= options.budget
                                                  ? DetMethod::SubsetExpansion
                                                  : DetMethod::Elimination);
    timed("verdict", [&] { rep.verdict = injectivity_verdict(rep.net, rep.method_used, options.budget); });

    if (options.want_determinant)
        timed("determinant", [&] {
            rep.determinant = det_extended_jacobian(rep.net, rep.basis, rep.method_used, options.budget);
            const SignClass cls = sign_report(*rep.determinant).cls;
            const bool consistent =
                (rep.verdict.kind == Verdict::Kind::AllDegenerate && cls == SignClass::AllZero) ||
                (rep.verdict.kind == Verdict::Kind::NotInjective && cls == SignClass::Mixed) ||
                (rep.verdict.kind == Verdict::Kind::Injective &&
                 cls == (rep.verdict.det_sign > 0 ? SignClass::AllPositive : SignClass::AllNegative));
            if (!consistent) throw InternalError("verdict disagrees with the determinant signs");
        });
    if (options.want_degeneracy)
        timed("degeneracy", [&] { rep.degeneracy = degeneracy_check(rep.net, options.budget); });
    if (options.want_open_closed)
        timed("open_closed", [&] { rep.open_closed = open_closed_relation(rep.net, options.budget); });
    if (options.want_wsd) timed("wsd", [&] { rep.wsd = wsd_check(rep.net, options.budget); });
    if (options.oracle_trials > 0)
        timed("oracle", [&] {
            rep.oracle = random_eval_crosscheck(rep.net, options.oracle_trials, options.oracle_seed);
        });
    return rep;
}

std::string render_text(const AnalysisReport& rep, bool with_timings) {
    const Network& net = rep.net;
    std::ostringstream out;
    out << "network: " << net.species_count() << " species, " << net.reaction_count() << " reactions\n";
    out << "openness: " << openness_name(rep.openness.cls) << " (s = " << rep.openness.s
        << ", d = " << rep.openness.d << ")\n";
    if (rep.basis.d == 0) {
        out << "conservation laws: none\n";
    } else {
        out << "conservation laws (d = " << rep.basis.d << "):\n";
        for (int i = 0; i < rep.basis.d; ++i) out << "  " << render_omega(net, rep.basis, i) << "\n";
        if (!rep.basis.perm_is_identity()) {
            out << "reduced-basis species order:";
            for (size_t p = 0; p < rep.basis.perm.size(); ++p)
                out << (p ? ", " : " ") << net.species_at(rep.basis.perm[p]).name;
            out << "\n";
        }
    }

    switch (rep.verdict.kind) {
        case Verdict::Kind::Injective:
            out << "verdict: INJECTIVE (det sign: " << (rep.verdict.det_sign > 0 ? "positive" : "negative")
                << ", " << (rep.verdict.det_sign > 0 ? "det" : "-det") << " all-positive)\n";
            break;
        case Verdict::Kind::NotInjective:
            out << "verdict: NOT INJECTIVE\n";
            out << "  positive product: " << render_witness(net, *rep.verdict.positive) << "\n";
            out << "  negative product: " << render_witness(net, *rep.verdict.negative) << "\n";
            break;
        case Verdict::Kind::AllDegenerate: out << "verdict: ALL STEADY STATES DEGENERATE\n"; break;
    }
    out << "method: " << method_name(rep.method_used) << " (" << rep.enumeration_pairs
        << " (R,I) pairs)\n";

    if (rep.determinant) {
        const VarNames names = var_names(net);
        out << "determinant: " << rep.determinant->monomial_count() << " monomials\n";
        if (rep.determinant->monomial_count() <= kDetPrintLimit)
            out << "  " << render(*rep.determinant, names) << "\n";
        else
            out << "  (not printed: exceeds " << kDetPrintLimit << " monomials)\n";
    }
    if (rep.degeneracy) {
        if (rep.degeneracy->all_degenerate)
            out << "degeneracy: all steady states degenerate"
                << (rep.degeneracy->reactant_rank_certificate ? " (reactant-rank certificate)" : "") << "\n";
        else
            out << "degeneracy: witness found: " << render_witness(net, *rep.degeneracy->witness) << "\n";
    }
    if (rep.open_closed) {
        out << "fully open closure: "
            << (rep.open_closed->fully_open_verdict.kind == Verdict::Kind::Injective ? "injective"
                                                                                     : "not injective")
            << "; closed network: " << verdict_name(rep.open_closed->closed_verdict.kind)
            << "; degree-s declared monomial: "
            << (rep.open_closed->degree_s_monomial_exists ? "present" : "absent") << "\n";
    }
    if (rep.wsd) {
        switch (rep.wsd->kind) {
            case WsdResult::Kind::Pass: out << "wsd: pass (sigma = " << rep.wsd->sigma_sign << ")\n"; break;
            case WsdResult::Kind::Fail:
                out << "wsd: fail";
                if (rep.wsd->conflict)
                    out << " (" << render_witness(net, rep.wsd->conflict->first) << " vs "
                        << render_witness(net, rep.wsd->conflict->second) << ")";
                out << "\n";
                break;
            case WsdResult::Kind::NotNAC: out << "wsd: not applicable (network is not NAC)\n"; break;
        }
    }
    if (rep.oracle)
        out << "oracle: " << rep.oracle->passes << "/" << rep.oracle->trials << " trials passed\n";
    if (with_timings) {
        out << "timings:";
        for (const auto& [label, ms] : rep.timings_ms) out << " " << label << "=" << ms << "ms";
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json render_json(const AnalysisReport& rep, bool with_timings) {
    using json = nlohmann::ordered_json;
    const Network& net = rep.net;
    json j;
    j["format_version"] = 1;
    j["network"]["n"] = net.species_count();
    j["network"]["m"] = net.reaction_count();
    j["network"]["species"] = json::array();
    for (const Species& sp : net.species()) j["network"]["species"].push_back(sp.name);
    j["network"]["reactions"] = json::array();
    for (const Reaction& r : net.reactions()) {
        json jr;
        jr["reactant"] = render_complex(net, r.reactant);
        jr["product"] = render_complex(net, r.product);
        jr["label"] = r.rate_label;
        jr["origin"] = r.origin == ReactionOrigin::Declared ? "declared" : "added_outflow";
        j["network"]["reactions"].push_back(std::move(jr));
    }
    j["openness"]["class"] = openness_name(rep.openness.cls);
    j["openness"]["s"] = rep.openness.s;
    j["openness"]["d"] = rep.openness.d;
    j["reduced_basis"]["d"] = rep.basis.d;
    j["reduced_basis"]["omegas"] = json::array();
    for (int i = 0; i < rep.basis.d; ++i) j["reduced_basis"]["omegas"].push_back(render_omega(net, rep.basis, i));
    j["reduced_basis"]["species_order"] = json::array();
    for (int p : rep.basis.perm) j["reduced_basis"]["species_order"].push_back(net.species_at(p).name);
    j["verdict"] = verdict_json(net, rep.verdict);
    j["method"] = method_name(rep.method_used);
    j["enumeration_pairs"] = rep.enumeration_pairs;

    if (rep.determinant) {
        j["determinant"]["monomial_count"] = rep.determinant->monomial_count();
        if (rep.determinant->monomial_count() <= kDetPrintLimit) {
            const VarNames names = var_names(net);
            json monos = json::array();
            for (const Term& t : rep.determinant->terms()) {
                std::string s = to_string(t.coeff);
                if (!t.mono.is_one()) s += "*" + render(t.mono, names);
                monos.push_back(std::move(s));
            }
            j["determinant"]["monomials"] = std::move(monos);
        } else {
            j["determinant"]["truncated"] = true;
        }
    }
    if (rep.degeneracy) {
        j["degeneracy"]["all_degenerate"] = rep.degeneracy->all_degenerate;
        j["degeneracy"]["reactant_rank_certificate"] = rep.degeneracy->reactant_rank_certificate;
        if (rep.degeneracy->witness) j["degeneracy"]["witness"] = witness_json(net, *rep.degeneracy->witness);
    }
    if (rep.open_closed) {
        j["open_closed"]["fully_open_injective"] =
            rep.open_closed->fully_open_verdict.kind == Verdict::Kind::Injective;
        j["open_closed"]["fully_open_verdict"] = verdict_json(net, rep.open_closed->fully_open_verdict);
        j["open_closed"]["closed_verdict"] = verdict_json(net, rep.open_closed->closed_verdict);
        j["open_closed"]["dichotomy_applies"] = rep.open_closed->dichotomy_applies;
        j["open_closed"]["degree_s_monomial_exists"] = rep.open_closed->degree_s_monomial_exists;
    }
    if (rep.wsd) {
        switch (rep.wsd->kind) {
            case WsdResult::Kind::Pass:
                j["wsd"]["kind"] = "pass";
                j["wsd"]["sigma"] = rep.wsd->sigma_sign;
                break;
            case WsdResult::Kind::Fail:
                j["wsd"]["kind"] = "fail";
                if (rep.wsd->conflict) {
                    j["wsd"]["positive"] = witness_json(net, rep.wsd->conflict->first);
                    j["wsd"]["negative"] = witness_json(net, rep.wsd->conflict->second);
                }
                break;
            case WsdResult::Kind::NotNAC: j["wsd"]["kind"] = "not_nac"; break;
        }
    }
    if (rep.oracle) {
        j["oracle"]["trials"] = rep.oracle->trials;
        j["oracle"]["passes"] = rep.oracle->passes;
        j["oracle"]["failures"] = rep.oracle->failures;
    }
    if (with_timings) {
        json t;
        for (const auto& [label, ms] : rep.timings_ms) t[label] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j;
}

int exit_code(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::Injective: return 0;
        case Verdict::Kind::NotInjective: return 2;
        case Verdict::Kind::AllDegenerate: return 3;
    }
    return 1;
}

}  // namespace crn
