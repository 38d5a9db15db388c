#pragma once

#include "crn/matrix.hpp"
#include "crn/network.hpp"

#include <vector>

namespace crn {

// Basis of the left null space of the stoichiometric matrix, brought to
// the reduced form: after permuting species so the pivot species come
// first, the stacked rows carry an identity block in their first d columns.
struct ReducedBasis {
    std::vector<int> perm;  // size n; perm[p] = original species index at permuted position p
    QMat omegas;            // d x n, columns in permuted species order
    int d = 0;

    bool perm_is_identity() const {
        for (size_t p = 0; p < perm.size(); ++p)
            if (perm[p] != static_cast<int>(p)) return false;
        return true;
    }

    // Row i as a vector over the original species indexing.
    std::vector<Rat> omega_original(int i) const {
        std::vector<Rat> v(perm.size());
        for (size_t p = 0; p < perm.size(); ++p) v[perm[p]] = omegas(i, static_cast<int>(p));
        return v;
    }
};

ReducedBasis reduced_conservation_basis(const Network& net);

}  // namespace crn
