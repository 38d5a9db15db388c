#include "crn/matrix.hpp"

#include <algorithm>

namespace crn {

QMat transpose(const QMat& m) {
    QMat t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

QMat rref(QMat m, std::vector<int>* pivot_cols) {
    const int rows = m.rows(), cols = m.cols();
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
        const Rat inv = Rat(1) / m(lead, col);
        for (int j = col; j < cols; ++j) m(lead, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || m(r, col) == 0) continue;
            const Rat factor = m(r, col);
            for (int j = col; j < cols; ++j) m(r, j) -= factor * m(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return m;
}

int rank(const QMat& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

QMat left_nullspace_basis(const QMat& m) {
    // Null space of M^t via the free-variable construction, then a second
    // rref so the returned rows are the canonical basis of the subspace.
    const int n = m.rows();
    std::vector<int> pivots;
    QMat r = rref(transpose(m), &pivots);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;

    const int d = n - static_cast<int>(pivots.size());
    QMat basis(d, n);
    int row = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(row, f) = 1;
        for (size_t k = 0; k < pivots.size(); ++k) basis(row, pivots[k]) = -r(static_cast<int>(k), f);
        ++row;
    }
    return rref(std::move(basis));
}

Rat det(const QMat& m) {
    if (m.rows() != m.cols()) throw Error("det: matrix is not square");
    const int n = m.rows();
    QMat a = m;
    Rat result = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            result = -result;
        }
        result *= a(col, col);
        const Rat inv = Rat(1) / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const Rat factor = a(r, col) * inv;
            for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return result;
}

Rat minor_det(const QMat& m, std::span<const int> removed_rows) {
    const int s = m.cols();
    if (static_cast<int>(removed_rows.size()) != m.rows() - s)
        throw Error("minor_det: |removed rows| must equal rows - cols");
    std::vector<bool> removed(m.rows(), false);
    for (int r : removed_rows) {
        if (r < 0 || r >= m.rows() || removed[r]) throw Error("minor_det: bad row index set");
        removed[r] = true;
    }
    QMat sub(s, s);
    int row = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (removed[i]) continue;
        for (int j = 0; j < s; ++j) sub(row, j) = m(i, j);
        ++row;
    }
    return det(sub);
}

}  // namespace crn
