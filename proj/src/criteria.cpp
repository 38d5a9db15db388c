#include "crn/criteria.hpp"

#include "crn/rates.hpp"

#include <algorithm>
#include <numeric>

namespace crn {

namespace {

// Visits all k-subsets of {0..n-1} in ascending lexicographic order of the
// index tuple. The callback returns false to stop early.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!f(std::span<const int>(idx))) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t binomial_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > UINT64_MAX / factor) return UINT64_MAX;
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Minor products. The reactant and reaction matrices have small integer
// entries, so the s x s minors are computed by integer Bareiss elimination
// in 128-bit arithmetic when the Hadamard bound allows it, with an exact
// rational fallback otherwise.
// ---------------------------------------------------------------------------

using i128 = __int128;

i128 det_bareiss_int(std::vector<i128>& a, int s) {
    if (s == 0) return 1;
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < s; ++k) {
        int pivot = -1;
        for (int r = k; r < s; ++r) {
            if (a[r * s + k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = 0; j < s; ++j) std::swap(a[pivot * s + j], a[k * s + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < s; ++i) {
            for (int j = k + 1; j < s; ++j)
                a[i * s + j] = (a[i * s + j] * a[k * s + k] - a[i * s + k] * a[k * s + j]) / prev;
            a[i * s + k] = 0;
        }
        prev = a[k * s + k];
    }
    return sign * a[(s - 1) * s + (s - 1)];
}

// Column data for a fixed reaction set R: reactant coefficients and
// reactant-minus-product coefficients, n x s, row-major.
struct SubsetColumns {
    int n = 0, s = 0;
    std::vector<long long> reactant;  // Y(R)
    std::vector<long long> reaction;  // G(R) = reactant - product
    bool small = true;                // safe for the 128-bit path

    SubsetColumns(const Network& net, std::span<const int> reactions) {
        n = net.species_count();
        s = static_cast<int>(reactions.size());
        reactant.assign(static_cast<size_t>(n) * s, 0);
        reaction.assign(static_cast<size_t>(n) * s, 0);
        for (int j = 0; j < s; ++j) {
            const Reaction& r = net.reaction_at(reactions[j]);
            for (const auto& [i, c] : r.reactant.terms()) {
                reactant[static_cast<size_t>(i) * s + j] = c;
                reaction[static_cast<size_t>(i) * s + j] += c;
            }
            for (const auto& [i, c] : r.product.terms()) reaction[static_cast<size_t>(i) * s + j] -= c;
        }
        long long max_abs = 0;
        for (long long v : reactant) max_abs = std::max(max_abs, std::abs(v));
        for (long long v : reaction) max_abs = std::max(max_abs, std::abs(v));
        small = s <= 10 && max_abs <= 16;
    }

    // Product det(Y(R)_I) det(G(R)_I) for a set I of removed rows.
    Rat minor_product(std::span<const int> removed, const Network& net,
                      std::span<const int> reactions) const {
        if (small) {
            std::vector<bool> cut(n, false);
            for (int r : removed) cut[r] = true;
            std::vector<i128> sub(static_cast<size_t>(s) * s);
            auto fill = [&](const std::vector<long long>& src) {
                int row = 0;
                for (int i = 0; i < n; ++i) {
                    if (cut[i]) continue;
                    for (int j = 0; j < s; ++j) sub[static_cast<size_t>(row) * s + j] = src[static_cast<size_t>(i) * s + j];
                    ++row;
                }
            };
            fill(reactant);
            const i128 dy = det_bareiss_int(sub, s);
            if (dy == 0) return 0;
            fill(reaction);
            const i128 dg = det_bareiss_int(sub, s);
            if (dg == 0) return 0;
            const i128 prod = dy * dg;
            const bool neg = prod < 0;
            i128 mag = neg ? -prod : prod;
            Rat out = 0;
            Rat base = 1;
            while (mag > 0) {
                out += base * static_cast<unsigned long long>(mag & 0xFFFFFFFFull);
                base *= Rat(1ull << 32);
                mag >>= 32;
            }
            return neg ? Rat(-out) : out;
        }
        const Rat dy = minor_det(reactant_matrix_for(net, reactions), removed);
        if (dy == 0) return 0;
        return dy * minor_det(reaction_matrix_for(net, reactions), removed);
    }
};

// Exponent vector of the concentration part of the coefficient monomial:
// sum of reactant coefficients over R, minus one outside I.
std::vector<int> reactant_row_sums(const Network& net, std::span<const int> reactions) {
    std::vector<int> v(net.species_count(), 0);
    for (int r : reactions)
        for (const auto& [i, c] : net.reaction_at(r).reactant.terms()) v[i] += c;
    return v;
}

Monomial concentration_monomial(const std::vector<int>& row_sums, std::span<const int> I) {
    std::vector<bool> in_I(row_sums.size(), false);
    for (int i : I) in_I[i] = true;
    Monomial m;
    for (size_t j = 0; j < row_sums.size(); ++j) {
        const int e = row_sums[j] - 1 + (in_I[j] ? 1 : 0);
        if (e < 0) throw InternalError("negative concentration exponent for a nonzero minor product");
        if (e > 0) m.multiply_by(conc_var(static_cast<int>(j)), e);
    }
    return m;
}

void require_nonempty(const Network& net) {
    if (net.species_count() == 0 || net.reaction_count() == 0)
        throw Error("network has no species or no reactions");
}

struct Enumeration {
    int s, d;
    std::vector<int> open_set;  // missing-outflow species
};

Enumeration enumeration_shape(const Network& net) {
    const int n = net.species_count();
    const int s = rank(stoichiometric_matrix(net));
    return {s, n - s, net.missing_outflows()};
}

}  // namespace

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Injective: return "injective";
        case Verdict::Kind::NotInjective: return "not injective";
        case Verdict::Kind::AllDegenerate: return "all steady states degenerate";
    }
    return "?";
}

std::uint64_t enumeration_size(const Network& net) {
    const Enumeration e = enumeration_shape(net);
    const std::uint64_t a = binomial_saturating(net.reaction_count(), e.s);
    const std::uint64_t b = binomial_saturating(static_cast<int>(e.open_set.size()), e.d);
    if (b != 0 && a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

Rat sigma(const Network& net, std::span<const int> reactions) {
    require_nonempty(net);
    const int n = net.species_count();
    if (static_cast<int>(reactions.size()) != n) throw Error("sigma: need exactly n reactions");
    const Openness o = classify_openness(net);
    if (o.cls == OpennessClass::Closed) throw Error("sigma: network is not open");
    const Rat dy = det(reactant_matrix_for(net, reactions));
    const Rat dg = det(reaction_matrix_for(net, reactions));
    const Rat prod = dy * dg;
    return n % 2 == 0 ? prod : Rat(-prod);
}

std::vector<std::pair<std::vector<int>, Rat>> sigma_products(const Network& net,
                                                             std::span<const int> reactions) {
    require_nonempty(net);
    const Enumeration e = enumeration_shape(net);
    if (static_cast<int>(reactions.size()) != e.s) throw Error("sigma_products: need exactly s reactions");
    const SubsetColumns cols(net, reactions);
    std::vector<std::pair<std::vector<int>, Rat>> out;
    for_each_combination(static_cast<int>(e.open_set.size()), e.d, [&](std::span<const int> pick) {
        std::vector<int> I(pick.size());
        for (size_t i = 0; i < pick.size(); ++i) I[i] = e.open_set[pick[i]];
        Rat p = cols.minor_product(I, net, reactions);
        if (p != 0) out.push_back({std::move(I), std::move(p)});
        return true;
    });
    return out;
}

Polynomial coefficient_closed(const Network& net, const ReducedBasis& basis,
                              std::span<const int> reactions,
                              std::vector<std::pair<std::vector<int>, Rat>>* contributions) {
    require_nonempty(net);
    const int s = net.species_count() - basis.d;
    if (static_cast<int>(reactions.size()) != s) throw Error("coefficient_closed: need exactly s reactions");
    const std::vector<int> row_sums = reactant_row_sums(net, reactions);
    auto products = sigma_products(net, reactions);
    const Rat outer = s % 2 == 0 ? Rat(1) : Rat(-1);
    std::vector<Term> terms;
    for (auto& [I, p] : products) terms.push_back({concentration_monomial(row_sums, I), outer * p});
    if (contributions) *contributions = std::move(products);
    return Polynomial::from_terms(std::move(terms));
}

namespace {

Polynomial det_by_subsets(const Network& net, const ReducedBasis& basis, std::uint64_t budget) {
    if (enumeration_size(net) > budget)
        throw BudgetExceeded("subset enumeration of " + std::to_string(enumeration_size(net)) +
                             " (R,I) pairs exceeds the budget of " + std::to_string(budget));
    const int s = net.species_count() - basis.d;
    const Rat outer = s % 2 == 0 ? Rat(1) : Rat(-1);
    const Enumeration e = enumeration_shape(net);
    std::vector<Term> terms;
    for_each_combination(net.reaction_count(), s, [&](std::span<const int> R) {
        const SubsetColumns cols(net, R);
        const std::vector<int> row_sums = reactant_row_sums(net, R);
        Monomial k_part;
        for (int r : R) k_part.multiply_by(rate_var(r), 1);
        for_each_combination(static_cast<int>(e.open_set.size()), e.d, [&](std::span<const int> pick) {
            std::vector<int> I(pick.size());
            for (size_t i = 0; i < pick.size(); ++i) I[i] = e.open_set[pick[i]];
            const Rat p = cols.minor_product(I, net, R);
            if (p != 0) terms.push_back({k_part.times(concentration_monomial(row_sums, I)), outer * p});
            return true;
        });
        return true;
    });
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace

Polynomial det_extended_jacobian(const Network& net, const ReducedBasis& basis, DetMethod method,
                                 std::uint64_t budget) {
    require_nonempty(net);
    switch (method) {
        case DetMethod::SubsetExpansion: return det_by_subsets(net, basis, budget);
        case DetMethod::Elimination: return det_fraction_free(extended_jacobian(net, basis));
        case DetMethod::Both: {
            Polynomial by_subsets = det_by_subsets(net, basis, budget);
            Polynomial by_elimination = det_fraction_free(extended_jacobian(net, basis));
            if (!(by_subsets == by_elimination))
                throw InternalError("determinant methods disagree");
            return by_subsets;
        }
    }
    throw Error("unknown determinant method");
}

std::pair<Polynomial, Polynomial> det_fully_open_relation(const Network& net) {
    require_nonempty(net);
    const Openness o = classify_openness(net);
    if (o.cls != OpennessClass::Closed) throw Error("det_fully_open_relation: network is not closed");

    const Network closure = fully_open_closure(net);
    std::map<Variable, Rat> added_ones;
    for (int j = 0; j < closure.reaction_count(); ++j)
        if (closure.reaction_at(j).origin == ReactionOrigin::AddedOutflow) added_ones[rate_var(j)] = 1;
    std::vector<Variable> vars;
    for (int i = 0; i < closure.species_count(); ++i) vars.push_back(conc_var(i));
    PolyMat j_open = jacobian(species_rate_function(closure), vars);
    for (int i = 0; i < j_open.rows(); ++i)
        for (int j = 0; j < j_open.cols(); ++j) j_open(i, j) = j_open(i, j).substitute(added_ones);
    Polynomial lhs = det_fraction_free(j_open);

    const ReducedBasis basis = reduced_conservation_basis(net);
    PolyMat m = extended_jacobian(net, basis);
    const std::vector<int> open_set = net.missing_outflows();
    for (int p = basis.d; p < m.rows(); ++p) {
        const int species = basis.perm[p];
        if (std::find(open_set.begin(), open_set.end(), species) != open_set.end())
            m(p, p) -= Polynomial(Rat(1));
    }
    Polynomial rhs = det_fraction_free(m);
    if (basis.d % 2 == 1) rhs = -rhs;
    return {std::move(lhs), std::move(rhs)};
}

namespace {

SubsetWitness make_witness(std::span<const int> R, std::vector<int> I, Rat value) {
    return {std::vector<int>(R.begin(), R.end()), std::move(I), std::move(value)};
}

// Reconstructs the (R, I) pair behind a determinant monomial: R is the set
// of rate constants, and I collects the species whose concentration
// exponent was not reduced by one.
SubsetWitness witness_from_monomial(const Network& net, int s, const Monomial& mono,
                                    const Rat& coeff) {
    std::vector<int> R;
    for (const auto& [v, e] : mono.exponents())
        if (v.kind == Variable::Kind::RateConstant) {
            if (e != 1) throw InternalError("determinant monomial is not linear in a rate constant");
            R.push_back(v.index);
        }
    const std::vector<int> row_sums = reactant_row_sums(net, R);
    std::vector<int> I;
    for (int j = 0; j < net.species_count(); ++j) {
        const int e = mono.exponent(conc_var(j));
        if (e == row_sums[j])
            I.push_back(j);
        else if (e != row_sums[j] - 1)
            throw InternalError("determinant monomial does not match the coefficient formula");
    }
    Rat value = s % 2 == 0 ? coeff : Rat(-coeff);
    return {std::move(R), std::move(I), std::move(value)};
}

Verdict verdict_by_enumeration(const Network& net, std::uint64_t budget) {
    if (enumeration_size(net) > budget)
        throw BudgetExceeded("subset enumeration of " + std::to_string(enumeration_size(net)) +
                             " (R,I) pairs exceeds the budget of " + std::to_string(budget));
    const Enumeration e = enumeration_shape(net);
    std::optional<SubsetWitness> first_pos, first_neg;
    for_each_combination(net.reaction_count(), e.s, [&](std::span<const int> R) {
        const SubsetColumns cols(net, R);
        for_each_combination(static_cast<int>(e.open_set.size()), e.d, [&](std::span<const int> pick) {
            std::vector<int> I(pick.size());
            for (size_t i = 0; i < pick.size(); ++i) I[i] = e.open_set[pick[i]];
            Rat p = cols.minor_product(I, net, R);
            if (p > 0 && !first_pos)
                first_pos = make_witness(R, std::move(I), std::move(p));
            else if (p < 0 && !first_neg)
                first_neg = make_witness(R, std::move(I), std::move(p));
            return !(first_pos && first_neg);
        });
        return !(first_pos && first_neg);
    });
    if (first_pos && first_neg)
        return {Verdict::Kind::NotInjective, 0, std::move(first_pos), std::move(first_neg)};
    if (!first_pos && !first_neg) return {Verdict::Kind::AllDegenerate, 0, {}, {}};
    const int product_sign = first_pos ? 1 : -1;
    const int det_sign = e.s % 2 == 0 ? product_sign : -product_sign;
    return {Verdict::Kind::Injective, det_sign, {}, {}};
}

Verdict verdict_by_elimination(const Network& net) {
    const ReducedBasis basis = reduced_conservation_basis(net);
    const int s = net.species_count() - basis.d;
    const Polynomial d = det_extended_jacobian(net, basis, DetMethod::Elimination);
    const SignReport rep = sign_report(d);
    switch (rep.cls) {
        case SignClass::AllZero: return {Verdict::Kind::AllDegenerate, 0, {}, {}};
        case SignClass::AllPositive: return {Verdict::Kind::Injective, 1, {}, {}};
        case SignClass::AllNegative: return {Verdict::Kind::Injective, -1, {}, {}};
        case SignClass::Mixed: {
            SubsetWitness pos = witness_from_monomial(net, s, *rep.positive_witness,
                                                      d.coefficient(*rep.positive_witness));
            SubsetWitness neg = witness_from_monomial(net, s, *rep.negative_witness,
                                                      d.coefficient(*rep.negative_witness));
            // The monomial witnesses carry the determinant's coefficient sign;
            // report the pair by product sign.
            if (pos.value < 0) std::swap(pos, neg);
            return {Verdict::Kind::NotInjective, 0, std::move(pos), std::move(neg)};
        }
    }
    throw InternalError("unreachable sign class");
}

}  // namespace

Verdict injectivity_verdict(const Network& net, DetMethod method, std::uint64_t budget) {
    require_nonempty(net);
    switch (method) {
        case DetMethod::SubsetExpansion: return verdict_by_enumeration(net, budget);
        case DetMethod::Elimination: return verdict_by_elimination(net);
        case DetMethod::Both: {
            Verdict a = verdict_by_enumeration(net, budget);
            Verdict b = verdict_by_elimination(net);
            if (!(a == b)) throw InternalError("verdict methods disagree");
            return a;
        }
    }
    throw Error("unknown determinant method");
}

Verdict injectivity_verdict_auto(const Network& net, std::uint64_t budget) {
    require_nonempty(net);
    if (enumeration_size(net) <= budget) return verdict_by_enumeration(net, budget);
    return verdict_by_elimination(net);
}

DegeneracyResult degeneracy_check(const Network& net, std::uint64_t budget) {
    require_nonempty(net);
    const Enumeration e = enumeration_shape(net);
    if (rank(reactant_matrix(net)) < e.s) return {true, true, {}};
    if (enumeration_size(net) > budget)
        throw BudgetExceeded("degeneracy enumeration exceeds the budget");
    std::optional<SubsetWitness> witness;
    for_each_combination(net.reaction_count(), e.s, [&](std::span<const int> R) {
        const SubsetColumns cols(net, R);
        for_each_combination(static_cast<int>(e.open_set.size()), e.d, [&](std::span<const int> pick) {
            std::vector<int> I(pick.size());
            for (size_t i = 0; i < pick.size(); ++i) I[i] = e.open_set[pick[i]];
            Rat p = cols.minor_product(I, net, R);
            if (p != 0) witness = make_witness(R, std::move(I), std::move(p));
            return !witness;
        });
        return !witness;
    });
    if (witness) return {false, false, std::move(witness)};
    return {true, false, {}};
}

Polynomial det_jacobian_at_one_fully_open(const Network& net) {
    const Network closure = fully_open_closure(net);
    std::vector<Variable> vars;
    std::map<Variable, Rat> ones;
    for (int i = 0; i < closure.species_count(); ++i) {
        vars.push_back(conc_var(i));
        ones[conc_var(i)] = 1;
    }
    PolyMat j = jacobian(species_rate_function(closure), vars);
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c) j(r, c) = j(r, c).substitute(ones);
    return det_fraction_free(j);
}

OpenClosedReport open_closed_relation(const Network& net, std::uint64_t budget) {
    require_nonempty(net);
    OpenClosedReport rep{};
    rep.fully_open_verdict = injectivity_verdict_auto(fully_open_closure(net), budget);
    rep.closed_verdict = injectivity_verdict_auto(net, budget);
    rep.dichotomy_applies = rep.fully_open_verdict.kind == Verdict::Kind::Injective;

    const int s = rank(stoichiometric_matrix(net));
    const int declared = net.reaction_count();
    const Polynomial det1 = det_jacobian_at_one_fully_open(net);
    rep.degree_s_monomial_exists = false;
    for (const Term& t : det1.terms()) {
        int declared_degree = 0;
        for (const auto& [v, e] : t.mono.exponents())
            if (v.kind == Variable::Kind::RateConstant && v.index < declared) declared_degree += e;
        if (declared_degree == s) {
            rep.degree_s_monomial_exists = true;
            break;
        }
    }

    if (rep.dichotomy_applies) {
        if (rep.closed_verdict.kind == Verdict::Kind::NotInjective)
            throw InternalError("dichotomy violated: closure injective but network not injective");
        const bool injective = rep.closed_verdict.kind == Verdict::Kind::Injective;
        if (injective != rep.degree_s_monomial_exists)
            throw InternalError("dichotomy violated: degree-s monomial test disagrees with the verdict");
    }
    return rep;
}

WsdResult wsd_check(const Network& net, std::uint64_t budget) {
    require_nonempty(net);
    for (const Reaction& r : net.reactions())
        for (const auto& [i, c] : r.reactant.terms())
            if (r.product.coeff(i) != 0) return {WsdResult::Kind::NotNAC, 0, {}};

    if (enumeration_size(net) > budget) throw BudgetExceeded("wsd enumeration exceeds the budget");
    const Enumeration e = enumeration_shape(net);
    std::optional<SubsetWitness> first_pos, first_neg;
    for_each_combination(net.reaction_count(), e.s, [&](std::span<const int> R) {
        const SubsetColumns cols(net, R);
        for_each_combination(static_cast<int>(e.open_set.size()), e.d, [&](std::span<const int> pick) {
            std::vector<int> I(pick.size());
            for (size_t i = 0; i < pick.size(); ++i) I[i] = e.open_set[pick[i]];
            Rat p = cols.minor_product(I, net, R);
            if (p > 0 && !first_pos)
                first_pos = make_witness(R, std::move(I), std::move(p));
            else if (p < 0 && !first_neg)
                first_neg = make_witness(R, std::move(I), std::move(p));
            return !(first_pos && first_neg);
        });
        return !(first_pos && first_neg);
    });
    if (first_pos && first_neg)
        return {WsdResult::Kind::Fail, 0, std::make_pair(std::move(*first_pos), std::move(*first_neg))};
    if (!first_pos && !first_neg) return {WsdResult::Kind::Fail, 0, {}};
    return {WsdResult::Kind::Pass, first_pos ? 0 : 1, {}};
}

}  // namespace crn
