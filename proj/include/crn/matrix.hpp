#pragma once

#include "crn/rational.hpp"

#include <span>
#include <vector>

namespace crn {

// Dense matrix of exact rationals, row-major. Dimensions may be zero
// (e.g. conservation bases of open networks are 0 x n).
class QMat {
  public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const QMat&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

QMat transpose(const QMat& m);

// Reduced row echelon form with deterministic pivoting: leftmost pivot
// column, first row with a nonzero entry. Pivot columns are appended to
// *pivot_cols (ascending) when the pointer is non-null.
QMat rref(QMat m, std::vector<int>* pivot_cols = nullptr);

int rank(const QMat& m);

// Canonical basis of { w : w^t M = 0 }, returned as a d x n matrix in
// reduced row echelon form. d = n - rank(M).
QMat left_nullspace_basis(const QMat& m);

// Exact determinant of a square matrix (Gaussian elimination over Q,
// first-nonzero pivot selection).
Rat det(const QMat& m);

// Determinant of the square submatrix of an n x s matrix obtained by
// removing the given rows (ascending indices, |removed| = n - s).
// Throws Error on a dimension mismatch.
Rat minor_det(const QMat& m, std::span<const int> removed_rows);

}  // namespace crn
