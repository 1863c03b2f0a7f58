#pragma once

#include "symplt/matrix.h"

namespace symplt {

inline constexpr double kSymmetryTol = 1e-12;

enum class Orientation { Lower, Upper };

/// Triangular matrix with strictly positive diagonal. The zero triangle is
/// checked to be exactly zero on construction.
class TriangularFactor {
public:
    TriangularFactor() = default;
    TriangularFactor(Matrix m, Orientation orientation);

    const Matrix& matrix() const noexcept { return matrix_; }
    Orientation orientation() const noexcept { return orientation_; }
    Index size() const noexcept { return matrix_.rows(); }

private:
    Matrix matrix_;
    Orientation orientation_ = Orientation::Lower;
};

/// M = L L^T, right-looking. Input must be symmetric to within kSymmetryTol
/// (relative); it is symmetrized before factoring.
TriangularFactor cholesky_lower(const Matrix& m);

/// M = U U^T with U upper triangular: Cholesky of the index-reversed matrix,
/// reversed back. Error indices refer to the original ordering.
TriangularFactor reverse_cholesky(const Matrix& m);

/// Returns (l^{-1})^T, the inverse computed column by column with
/// forward_substitution against the identity.
Matrix invert_lower_transpose(const TriangularFactor& l);

}  // namespace symplt
