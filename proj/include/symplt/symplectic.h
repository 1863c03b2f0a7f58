#pragma once

#include "symplt/block_factor.h"
#include "symplt/matrix.h"

namespace symplt {

inline constexpr double kDefaultTol = 1e-10;

/// Conformal 2x2 partition of a 2n x 2n matrix.
struct BlockView {
    Matrix a11, a12, a21, a22;
    Index n = 0;
};

BlockView split_blocks(const Matrix& a);
Matrix assemble_blocks(const BlockView& b);

/// Loss of symplecticity of X: delta = ||X^T J X - J||_2 and
/// symp_rel = delta / ||X||_2^2.
struct SymplecticDefect {
    double delta = 0.0;
    double symp_rel = 0.0;
    double norm_x = 0.0;
};

/// Norms of the nontrivial blocks of F = L^T J L - J for a block lower
/// triangular L, together with delta_l = ||F||_2.
struct FactorResidual {
    double f11_norm = 0.0;
    double f12_norm = 0.0;
    double delta_l = 0.0;
};

/// J x for J = [0 I; -I 0], as a block row swap with negation.
Matrix apply_j(const Matrix& x);

/// X^T J X - J. Each block is formed as the difference of two n x n
/// products, e.g. the (1,1) block as X11^T X21 - X21^T X11, so for block
/// lower-triangular X the blocks coincide bit-for-bit with the F blocks of
/// factor_residual and the (2,2) block is exactly zero.
Matrix symplectic_form_residual(const Matrix& x);

/// Same quantity formed densely as matmul(x^T, apply_j(x)) minus J.
Matrix symplectic_form_residual_dense(const Matrix& x);

/// ||X^T J X - J||_2. Defined for every X, including X = 0.
double symplectic_delta(const Matrix& x);
/// Throws DegenerateInputError for X = 0, where symp_rel is undefined.
SymplecticDefect symplecticity_defect(const Matrix& x);

/// Block lower-triangular symplecticity test: L22^T L11 = I and
/// L21^T L11 = L11^T L21, both within tol in the 2-norm.
bool is_symplectic_blocklower(const BlockView& l, double tol);

/// [C S; -S C] pattern and orthogonality, within tol.
bool is_orthogonal_symplectic(const Matrix& q, double tol);

/// J^T a^T J; equals a^{-1} when a is symplectic. Not checked.
Matrix symplectic_inverse(const Matrix& a);

FactorResidual factor_residual(const BlockFactor& l);

/// ||x||^2 / (1 - delta(x)), an upper bound on kappa_2(x) when delta(x) < 1.
double kappa_bound(const Matrix& x);

/// X = diag(D, -D) with D = sqrt(t-1) diag(1, 0, ..., 0); delta(X) = t.
Matrix singular_with_defect(double t, Index n);

/// ||A||^2 (2 eps + eps^2): bound on delta(A + E) for symplectic A and
/// ||E|| <= eps ||A||.
double perturbation_bound(double norm_a, double eps);

/// max(f11, f12) <= delta_l <= 2 max(f11, f12) + slack * (1 + delta_l).
bool sandwich_holds(const FactorResidual& r, double slack = 1e-12);

}  // namespace symplt
