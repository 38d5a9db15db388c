#pragma once

// Randomized property suite shared by the property-test binary and the
// acceptance runner. All generation is seeded through SplitMix64, so every
// run sees the same networks.

#include "crn/criteria.hpp"
#include "crn/oracle.hpp"
#include "crn/rates.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace crn::test {

// Emits a random network as source text over species X1..Xn and parses it,
// so generated networks satisfy exactly the invariants parsed ones do.
inline Network random_network(SplitMix64& gen) {
    for (;;) {
        const int n = 2 + static_cast<int>(gen.below(5));  // 2..6 species
        const int m = 2 + static_cast<int>(gen.below(7));  // 2..8 reactions
        auto complex_text = [&]() {
            std::string out;
            for (int i = 0; i < n; ++i) {
                const std::uint64_t roll = gen.below(100);
                int coeff = 0;
                if (roll >= 85)
                    coeff = 2;
                else if (roll >= 50)
                    coeff = 1;
                if (coeff == 0) continue;
                if (!out.empty()) out += " + ";
                if (coeff > 1) out += std::to_string(coeff) + " ";
                out += "X" + std::to_string(i + 1);
            }
            return out.empty() ? std::string("0") : out;
        };
        std::set<std::pair<std::string, std::string>> seen;
        std::ostringstream src;
        int written = 0;
        for (int j = 0; j < m; ++j) {
            std::string lhs = complex_text();
            std::string rhs = complex_text();
            if (lhs == rhs) continue;
            if (!seen.insert({lhs, rhs}).second) continue;
            src << lhs << " -> " << rhs << "\n";
            ++written;
        }
        // Sprinkle declared outflows for variety in the missing-outflow set.
        for (int i = 0; i < n; ++i) {
            if (gen.below(100) < 20) {
                std::string lhs = "X" + std::to_string(i + 1);
                if (seen.insert({lhs, "0"}).second) {
                    src << lhs << " -> 0\n";
                    ++written;
                }
            }
        }
        if (written < 2) continue;
        try {
            return parse_network(src.str());
        } catch (const ParseError&) {
            continue;  // e.g. a species fell out of every complex
        }
    }
}

// Relabels species (fresh names, shuffled order) and shuffles reactions,
// returning the renamed network plus the index maps old -> new.
inline Network relabel(const Network& net, SplitMix64& gen) {
    const int n = net.species_count();
    const int m = net.reaction_count();
    std::vector<int> sp(n), rx(m);
    std::iota(sp.begin(), sp.end(), 0);
    std::iota(rx.begin(), rx.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(sp[i], sp[gen.below(i + 1)]);
    for (int i = m - 1; i > 0; --i) std::swap(rx[i], rx[gen.below(i + 1)]);
    std::vector<std::string> new_name(n);
    for (int i = 0; i < n; ++i) new_name[sp[i]] = "Y" + std::to_string(i + 1);

    auto complex_text = [&](const Complex& c) {
        if (c.is_zero()) return std::string("0");
        std::string out;
        for (const auto& [i, coeff] : c.terms()) {
            if (!out.empty()) out += " + ";
            if (coeff > 1) out += std::to_string(coeff) + " ";
            out += new_name[i];
        }
        return out;
    };
    std::ostringstream src;
    for (int j : rx) {
        const Reaction& r = net.reaction_at(j);
        src << complex_text(r.reactant) << " -> " << complex_text(r.product) << "\n";
    }
    return parse_network(src.str());
}

struct PropertyOutcome {
    int networks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline PropertyOutcome run_property_suite(int count, std::uint64_t seed) {
    SplitMix64 gen(seed);
    PropertyOutcome out;
    for (int iter = 0; iter < count; ++iter) {
        const Network net = random_network(gen);
        ++out.networks;
        auto fail = [&](const std::string& what) {
            out.failures.push_back("network " + std::to_string(iter) + ": " + what);
        };
        try {
            const ReducedBasis basis = reduced_conservation_basis(net);
            const int s = net.species_count() - basis.d;

            // (i) The two determinant routes agree.
            const Polynomial det_subsets =
                det_extended_jacobian(net, basis, DetMethod::SubsetExpansion);
            const Polynomial det_elim = det_extended_jacobian(net, basis, DetMethod::Elimination);
            if (!(det_subsets == det_elim)) fail("subset and elimination determinants differ");

            // (ii) w^t J(f) = 0 symbolically for every reduced-basis row.
            std::vector<Variable> vars;
            for (int i = 0; i < net.species_count(); ++i) vars.push_back(conc_var(i));
            const PolyMat jac = jacobian(species_rate_function(net), vars);
            for (int r = 0; r < basis.d; ++r) {
                const auto w = basis.omega_original(r);
                for (int col = 0; col < jac.cols(); ++col) {
                    Polynomial dot;
                    for (int row = 0; row < jac.rows(); ++row)
                        dot += jac(row, col).scaled(w[row]);
                    if (!dot.is_zero()) fail("omega^t J is not symbolically zero");
                }
            }

            // (iii) Homogeneous of rate degree s, each constant at most linear.
            for (const Term& t : det_elim.terms())
                if (t.mono.degree_in(Variable::Kind::RateConstant) != s)
                    fail("determinant monomial of rate degree != s");
            if (det_elim.max_degree_in(Variable::Kind::RateConstant) > 1)
                fail("a rate constant appears with degree > 1");

            // (iv) Adding inflow reactions leaves the Jacobian unchanged.
            {
                std::vector<Reaction> reactions = net.reactions();
                std::set<Complex> inflow_products;
                for (const Reaction& r : reactions)
                    if (r.reactant.is_zero()) inflow_products.insert(r.product);
                int added = 0;
                for (int i = 0; i < net.species_count() && added < 2; ++i) {
                    Complex target;
                    target.add(i, 1);
                    if (inflow_products.count(target)) continue;
                    reactions.push_back({Complex{}, target, "in_" + std::to_string(i),
                                         ReactionOrigin::Declared});
                    ++added;
                }
                const Network bigger(net.species(), reactions);
                const PolyMat jac2 = jacobian(species_rate_function(bigger), vars);
                for (int r = 0; r < jac.rows(); ++r)
                    for (int c = 0; c < jac.cols(); ++c)
                        if (!(jac(r, c) == jac2(r, c))) fail("inflow changed the Jacobian");
            }

            // (v) Relabeling invariance of the verdict.
            const Verdict verdict = injectivity_verdict(net);
            {
                SplitMix64 shuffler(seed ^ (0x5851F42D4C957F2Dull + iter));
                const Verdict relabeled = injectivity_verdict(relabel(net, shuffler));
                if (!(verdict == relabeled)) fail("verdict changed under relabeling");
            }

            // (vi) When the closure is injective the closed verdict is never
            // NotInjective (open_closed_relation asserts the full dichotomy).
            const OpenClosedReport rel = open_closed_relation(net);
            if (rel.dichotomy_applies && rel.closed_verdict.kind == Verdict::Kind::NotInjective)
                fail("dichotomy: closure injective but network not injective");

            // (vii) A WSD pass implies injectivity.
            const WsdResult wsd = wsd_check(net);
            if (wsd.kind == WsdResult::Kind::Pass && verdict.kind != Verdict::Kind::Injective)
                fail("wsd pass without an injective verdict");

            // Outflow normalization: substituting 1 for declared outflow
            // constants preserves the coefficient sign multiset.
            {
                std::map<Variable, Rat> ones;
                for (int j = 0; j < net.reaction_count(); ++j) {
                    const Reaction& r = net.reaction_at(j);
                    bool outflow = r.product.is_zero() && r.reactant.terms().size() == 1 &&
                                   r.reactant.terms()[0].second == 1;
                    if (outflow) ones[rate_var(j)] = 1;
                }
                if (!ones.empty()) {
                    auto signs = [](const Polynomial& p) {
                        std::pair<int, int> counts{0, 0};
                        for (const Term& t : p.terms()) (t.coeff > 0 ? counts.first : counts.second)++;
                        return counts;
                    };
                    if (signs(det_elim.substitute(ones)) != signs(det_elim))
                        fail("outflow normalization changed the sign multiset");
                }
            }

            // At-one reduction: the sign multiset of det at c = 1 matches the
            // joint-coefficient sign multiset (open networks).
            if (basis.d == 0) {
                std::map<Variable, Rat> c_ones;
                for (int i = 0; i < net.species_count(); ++i) c_ones[conc_var(i)] = 1;
                const Polynomial at_one = det_elim.substitute(c_ones);
                int pos = 0, neg = 0, pos1 = 0, neg1 = 0;
                for (const Term& t : det_elim.terms()) (t.coeff > 0 ? pos : neg)++;
                for (const Term& t : at_one.terms()) (t.coeff > 0 ? pos1 : neg1)++;
                if (pos != pos1 || neg != neg1) fail("c = 1 reduction changed the sign multiset");
            }

            // Sampled ranks: full rank at some point iff the determinant is
            // a nonzero polynomial.
            {
                SplitMix64 pts(seed ^ (0x9E3779B97F4A7C15ull + iter));
                bool full_somewhere = false;
                for (int t = 0; t < 50 && !full_somewhere; ++t)
                    full_somewhere = pointwise_rank_test(net, random_point(net, pts)).full_rank;
                if (full_somewhere != !det_elim.is_zero())
                    fail("sampled rank disagrees with the symbolic determinant");
            }

            // The closure always has the full stoichiometric rank.
            if (rank(stoichiometric_matrix(fully_open_closure(net))) != net.species_count())
                fail("fully open closure is rank-deficient");

            // The Leibniz-expansion coefficient oracle agrees with the
            // subset formula on a sampled reaction set.
            {
                SplitMix64 pick(seed ^ (0xD1B54A32D192ED03ull + iter));
                std::vector<int> all(net.reaction_count());
                std::iota(all.begin(), all.end(), 0);
                for (int i = net.reaction_count() - 1; i > 0; --i)
                    std::swap(all[i], all[pick.below(i + 1)]);
                std::vector<int> R(all.begin(), all.begin() + s);
                std::sort(R.begin(), R.end());
                if (!(bruteforce_coefficient(net, R) == coefficient_closed(net, basis, R)))
                    fail("bruteforce coefficient disagrees with the subset formula");
            }
        } catch (const Error& e) {
            fail(std::string("exception: ") + e.what());
        }
    }
    return out;
}

}  // namespace crn::test
