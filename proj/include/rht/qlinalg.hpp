#pragma once

#include "rht/scalar_traits.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rht {

using Index = Eigen::Index;

template <ExactField S>
struct RrefResult {
    Matrix<S> reduced;
    std::vector<Index> pivots;  // strictly increasing pivot columns
    Index rank = 0;
};

/// Reduced row-echelon form by Gauss-Jordan elimination, scanning columns
/// left to right and choosing the first nonzero row as pivot.
template <ExactField S>
RrefResult<S> rref(Matrix<S> m) {
    RrefResult<S> out;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const S inv = m(row, col).inverse();
        for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const S factor = m(i, col);
            for (Index j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) = m(i, j) - factor * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(m);
    return out;
}

template <ExactField S>
Index rank(const Matrix<S>& m) {
    return rref(m).rank;
}

/// Basis of {v : m v = 0}.  One vector per free column, carrying a 1 in that
/// column's slot and zeros in the other free slots.
template <ExactField S>
std::vector<Vector<S>> kernel_basis(const Matrix<S>& m) {
    const auto r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vector<S>> basis;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vector<S> v = Vector<S>::Constant(m.cols(), S(0));
        v(free) = S(1);
        for (Index k = 0; k < r.rank; ++k) v(r.pivots[static_cast<std::size_t>(k)]) = -r.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <ExactField S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix<S> aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    const auto r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vector<S> x = Vector<S>::Constant(m.cols(), S(0));
    for (Index k = 0; k < r.rank; ++k) x(r.pivots[static_cast<std::size_t>(k)]) = r.reduced(k, m.cols());
    return x;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <ExactField S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Index n = m.rows();
    Matrix<S> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Matrix<S>::Identity(n, n);
    const auto r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
        throw std::domain_error("singular matrix");
    return r.reduced.rightCols(n);
}

/// Indices of a maximal independent subset of the columns, chosen greedily
/// left to right (the pivot columns of the RREF).
template <ExactField S>
std::vector<Index> independent_columns(const Matrix<S>& m) {
    return rref(m).pivots;
}

/// Left inverse L of a matrix with full column rank (L m = I), computed as
/// (m^T m)^{-1} m^T, which is exact over the rationals.
template <ExactField S>
Matrix<S> left_inverse(const Matrix<S>& m) {
    const Matrix<S> gram = m.transpose() * m;
    return inverse(gram) * m.transpose();
}

/// Outcome of the positive integer kernel search.
struct FeasibilityResult {
    /// Coprime positive integer vector with A n = 0, when one exists.
    std::optional<std::vector<std::int64_t>> solution;
    /// Constraint rows forming an irreducible infeasible subsystem (empty
    /// when a solution was found).
    std::vector<std::size_t> witness_rows;

    [[nodiscard]] bool feasible() const { return solution.has_value(); }
};

/// Finds integers n_i >= 1 with A n = 0, or certifies there are none.
///
/// The rational kernel of A is computed first; Fourier-Motzkin elimination
/// in kernel coordinates then decides whether the kernel meets the open
/// positive orthant.  A strictly positive rational point is scaled by the
/// LCM of its denominators and divided by the gcd of its entries.  Columns
/// of A that are identically zero take the value 1.
FeasibilityResult positive_integer_kernel(const QMatrix& a);

/// True iff A n = 0 exactly.
bool satisfies(const QMatrix& a, const std::vector<std::int64_t>& n);

}  // namespace rht
