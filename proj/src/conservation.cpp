#include "crn/conservation.hpp"

#include <numeric>

namespace crn {

ReducedBasis reduced_conservation_basis(const Network& net) {
    const int n = net.species_count();
    QMat basis = left_nullspace_basis(stoichiometric_matrix(net));
    const int d = basis.rows();

    // basis is in rref; its pivot columns are the first nonzero entry of
    // each row. Permute pivot species to the front, the rest keep their
    // original relative order.
    std::vector<int> pivots;
    pivots.reserve(d);
    for (int i = 0; i < d; ++i) {
        int p = 0;
        while (p < n && basis(i, p) == 0) ++p;
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;

    ReducedBasis rb;
    rb.d = d;
    rb.perm = pivots;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) rb.perm.push_back(j);

    rb.omegas = QMat(d, n);
    for (int i = 0; i < d; ++i)
        for (int p = 0; p < n; ++p) rb.omegas(i, p) = basis(i, rb.perm[p]);
    return rb;
}

}  // namespace crn
