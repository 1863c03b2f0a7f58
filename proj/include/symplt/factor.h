#pragma once

// Symplectic LL^T factorization of a symmetric positive definite symplectic
// matrix A = [A11 A12; A12^T A22]:
//
//   L11 = chol(A11),   L21^T = L11^{-1} A12   (both algorithms)
//   W1: L22 = L11^{-T}, by forward substitution against I (about 5/3 n^3 flops)
//   W2: L22 = reverse Cholesky of S = A22 - L21 L21^T    (about 8/3 n^3 flops)
//
// In exact arithmetic both give the same symplectic L. Neither routine checks
// that A is symplectic.

#include <string_view>

#include "symplt/block_factor.h"
#include "symplt/symplectic.h"

namespace symplt {

enum class Algorithm { W1, W2 };

std::string_view to_string(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view s);

struct FactorizationOutput {
    BlockFactor factor;
    Algorithm algorithm = Algorithm::W1;
    /// ||A - L L^T||_2 / ||A||_2 against the matrix that was passed in.
    double dec = 0.0;
    FactorResidual residual;
};

/// ||a - l l^T||_2 / ||a||_2.
double decomposition_error(const Matrix& a, const Matrix& l);

/// A22 - L21 L21^T with L11 = chol(A11) and L21^T = L11^{-1} A12, symmetrized.
Matrix schur_complement(const BlockView& a);

FactorizationOutput factor_w1(const Matrix& a);
FactorizationOutput factor_w2(const Matrix& a);
FactorizationOutput factorize(const Matrix& a, Algorithm algorithm);

/// ||L22 - L11^{-T}||_2 <= tol * kappa_2(A11).
bool verify_theorem2(const Matrix& a, const FactorizationOutput& out, double tol);

}  // namespace symplt
