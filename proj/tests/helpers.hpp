#pragma once

#include "crn/network.hpp"
#include "crn/polynomial.hpp"

#include <map>
#include <string>

namespace crn::test {

inline Network load(const std::string& name) {
    return parse_network_file(std::string(CRN_NETWORKS_DIR) + "/" + name);
}

// Species index by name; throws when absent.
inline int species_index(const Network& net, const std::string& name) {
    for (const Species& sp : net.species())
        if (sp.name == name) return sp.index;
    throw Error("no species named " + name);
}

// Reaction index by rate label.
inline int reaction_index(const Network& net, const std::string& label) {
    for (int j = 0; j < net.reaction_count(); ++j)
        if (net.reaction_at(j).rate_label == label) return j;
    throw Error("no reaction labeled " + label);
}

// Builds a monomial from rate labels and species names, e.g.
// mono(net, {"k1","k3"}, {{"S1",1},{"S2",2}}).
inline Monomial mono(const Network& net, const std::vector<std::string>& rate_labels,
                     const std::map<std::string, int>& conc_exponents) {
    Monomial m;
    for (const auto& label : rate_labels) m.multiply_by(rate_var(reaction_index(net, label)), 1);
    for (const auto& [name, exp] : conc_exponents) m.multiply_by(conc_var(species_index(net, name)), exp);
    return m;
}

// Polynomial term helper for frozen expected values.
inline Term term(const Network& net, long long coeff, const std::vector<std::string>& rate_labels,
                 const std::map<std::string, int>& conc_exponents) {
    return {mono(net, rate_labels, conc_exponents), Rat(coeff)};
}

}  // namespace crn::test
