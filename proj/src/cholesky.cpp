#include "symplt/cholesky.h"

#include <cmath>
#include <utility>

namespace symplt {

TriangularFactor::TriangularFactor(Matrix m, Orientation orientation)
    : matrix_(std::move(m)), orientation_(orientation) {
    if (!matrix_.is_square()) throw DimensionError("TriangularFactor: matrix is not square");
    const Index n = matrix_.rows();
    for (Index i = 0; i < n; ++i) {
        if (!(matrix_(i, i) > 0.0))
            throw StructureError("TriangularFactor: diagonal entry " + std::to_string(i) +
                                 " is not positive");
        for (Index j = 0; j < n; ++j) {
            const bool zero_region = orientation_ == Orientation::Lower ? j > i : j < i;
            if (zero_region && matrix_(i, j) != 0.0)
                throw StructureError("TriangularFactor: nonzero entry in the zero triangle");
        }
    }
}

TriangularFactor cholesky_lower(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("cholesky_lower: matrix is not square");
    if (!is_symmetric(m, kSymmetryTol))
        throw SymmetryError("cholesky_lower: matrix is not symmetric");

    const Index n = m.rows();
    Matrix a = symmetrize(m);
    for (Index k = 0; k < n; ++k) {
        const double pivot = a(k, k);
        if (!(pivot > 0.0))
            throw NotPositiveDefiniteError("cholesky_lower: matrix is not positive definite", k);
        const double lkk = std::sqrt(pivot);
        a(k, k) = lkk;
        for (Index i = k + 1; i < n; ++i) a(i, k) /= lkk;
        // Trailing update of the lower triangle.
        for (Index i = k + 1; i < n; ++i) {
            const double lik = a(i, k);
            for (Index j = k + 1; j <= i; ++j) a(i, j) -= lik * a(j, k);
        }
    }
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) a(i, j) = 0.0;
    return TriangularFactor(std::move(a), Orientation::Lower);
}

TriangularFactor reverse_cholesky(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("reverse_cholesky: matrix is not square");
    try {
        const TriangularFactor l = cholesky_lower(reversal_permute(m));
        return TriangularFactor(reversal_permute(l.matrix()), Orientation::Upper);
    } catch (const NotPositiveDefiniteError& e) {
        throw NotPositiveDefiniteError("reverse_cholesky: matrix is not positive definite",
                                       m.rows() - 1 - e.index());
    }
}

Matrix invert_lower_transpose(const TriangularFactor& l) {
    if (l.orientation() != Orientation::Lower)
        throw StructureError("invert_lower_transpose: factor is not lower triangular");
    return transpose(forward_substitution(l.matrix(), Matrix::identity(l.size())));
}

}  // namespace symplt
