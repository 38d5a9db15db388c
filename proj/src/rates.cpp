#include "crn/rates.hpp"

#include <cctype>

namespace crn {

Polynomial mass_action_rate(const Network& net, int reaction) {
    const Reaction& r = net.reaction_at(reaction);
    Monomial m = Monomial::of(rate_var(reaction));
    for (const auto& [i, e] : r.reactant.terms()) m.multiply_by(conc_var(i), e);
    return Polynomial::from_term(Rat(1), std::move(m));
}

std::vector<Polynomial> species_rate_function(const Network& net) {
    std::vector<Polynomial> f(net.species_count());
    for (int j = 0; j < net.reaction_count(); ++j) {
        const Reaction& r = net.reaction_at(j);
        const Polynomial rate = mass_action_rate(net, j);
        for (const auto& [i, c] : r.product.terms()) f[i] += rate.scaled(c);
        for (const auto& [i, c] : r.reactant.terms()) f[i] -= rate.scaled(c);
    }
    return f;
}

std::vector<Polynomial> extended_rate_function(const Network& net, const ReducedBasis& basis) {
    const int n = net.species_count();
    std::vector<Polynomial> f = species_rate_function(net);
    std::vector<Polynomial> out(n);
    for (int i = 0; i < basis.d; ++i) {
        Polynomial lin;
        for (int p = 0; p < n; ++p) {
            const Rat& coeff = basis.omegas(i, p);
            if (coeff != 0) lin += Polynomial(conc_var(basis.perm[p])).scaled(coeff);
        }
        out[i] = std::move(lin);
    }
    for (int p = basis.d; p < n; ++p) out[p] = std::move(f[basis.perm[p]]);
    return out;
}

PolyMat extended_jacobian(const Network& net, const ReducedBasis& basis) {
    std::vector<Variable> vars;
    vars.reserve(net.species_count());
    for (int p = 0; p < net.species_count(); ++p) vars.push_back(conc_var(basis.perm[p]));
    return jacobian(extended_rate_function(net, basis), vars);
}

VarNames var_names(const Network& net) {
    VarNames names;
    for (const Reaction& r : net.reactions()) names.rate.push_back(r.rate_label);
    for (const Species& sp : net.species()) {
        bool s_digits = sp.name.size() >= 2 && sp.name[0] == 'S';
        for (size_t i = 1; i < sp.name.size() && s_digits; ++i)
            if (!std::isdigit(static_cast<unsigned char>(sp.name[i]))) s_digits = false;
        names.conc.push_back(s_digits ? "c" + sp.name.substr(1) : "c_" + sp.name);
    }
    return names;
}

}  // namespace crn
