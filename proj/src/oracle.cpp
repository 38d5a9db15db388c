#include "crn/oracle.hpp"

#include "crn/criteria.hpp"
#include "crn/rates.hpp"

#include <algorithm>

namespace crn {

std::map<Variable, Rat> random_point(const Network& net, SplitMix64& gen) {
    std::map<Variable, Rat> point;
    for (int j = 0; j < net.reaction_count(); ++j) point[rate_var(j)] = gen.positive_rational();
    for (int i = 0; i < net.species_count(); ++i) point[conc_var(i)] = gen.positive_rational();
    return point;
}

OracleReport random_eval_crosscheck(const Network& net, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error("random_eval_crosscheck: trials must be >= 1");
    const ReducedBasis basis = reduced_conservation_basis(net);
    const Polynomial symbolic = det_extended_jacobian(net, basis, DetMethod::Elimination);
    const PolyMat jac = extended_jacobian(net, basis);
    const VarNames names = var_names(net);

    SplitMix64 gen(seed);
    OracleReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const auto point = random_point(net, gen);
        const Rat via_symbolic = symbolic.is_zero() ? Rat(0) : symbolic.evaluate(point);
        QMat m(jac.rows(), jac.cols());
        for (int i = 0; i < jac.rows(); ++i)
            for (int j = 0; j < jac.cols(); ++j) m(i, j) = jac(i, j).evaluate(point);
        const Rat via_matrix = det(m);
        if (via_symbolic == via_matrix) {
            ++rep.passes;
        } else {
            std::string line = "trial " + std::to_string(t) + ": symbolic " + to_string(via_symbolic) +
                               " != matrix " + to_string(via_matrix) + " at";
            for (const auto& [v, val] : point) line += " " + names(v) + "=" + to_string(val);
            rep.failures.push_back(std::move(line));
        }
    }
    return rep;
}

RankResult pointwise_rank_test(const Network& net, const std::map<Variable, Rat>& point) {
    for (const auto& [v, val] : point)
        if (val <= 0) throw Error("pointwise_rank_test: assignment must be positive");
    const ReducedBasis basis = reduced_conservation_basis(net);
    const PolyMat jac = extended_jacobian(net, basis);
    QMat m(jac.rows(), jac.cols());
    for (int i = 0; i < jac.rows(); ++i)
        for (int j = 0; j < jac.cols(); ++j) m(i, j) = jac(i, j).evaluate(point);
    const int r = rank(m);
    const int n = net.species_count();
    return {r == n, n - r};
}

Polynomial bruteforce_coefficient(const Network& net, std::span<const int> reactions) {
    if (net.species_count() > 8) throw Error("bruteforce_coefficient: guarded to n <= 8");
    const ReducedBasis basis = reduced_conservation_basis(net);
    const int s = net.species_count() - basis.d;
    if (static_cast<int>(reactions.size()) != s)
        throw Error("bruteforce_coefficient: need exactly s reactions");

    Monomial target;
    for (int r : reactions) target.multiply_by(rate_var(r), 1);
    const Polynomial full = det_leibniz(extended_jacobian(net, basis));

    std::vector<Term> kept;
    for (const Term& t : full.terms()) {
        Monomial k_part, c_part;
        for (const auto& [v, e] : t.mono.exponents()) {
            if (v.kind == Variable::Kind::RateConstant)
                k_part.multiply_by(v, e);
            else
                c_part.multiply_by(v, e);
        }
        if (k_part == target) kept.push_back({std::move(c_part), t.coeff});
    }
    return Polynomial::from_terms(std::move(kept));
}

}  // namespace crn
