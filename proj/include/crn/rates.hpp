#pragma once

#include "crn/conservation.hpp"
#include "crn/network.hpp"
#include "crn/polynomial.hpp"

#include <vector>

namespace crn {

// Mass-action rate of one reaction: k_r * c^y, symbolic in both families.
Polynomial mass_action_rate(const Network& net, int reaction);

// Species formation rate function: component i is
// sum over reactions of k_r * c^y * (y'_i - y_i).
std::vector<Polynomial> species_rate_function(const Network& net);

// Extended rate function in permuted species order: the first d components
// are the conservation forms w^i . c, the rest are the formation-rate
// components of the remaining species.
std::vector<Polynomial> extended_rate_function(const Network& net, const ReducedBasis& basis);

// Jacobian of the extended rate function, rows and columns in permuted
// species order (entry (i,j) differentiates by the concentration of the
// species at permuted position j).
PolyMat extended_jacobian(const Network& net, const ReducedBasis& basis);

// Display names: rate labels verbatim; concentrations "c<digits>" for
// species named S<digits>, "c_<name>" otherwise.
VarNames var_names(const Network& net);

}  // namespace crn
