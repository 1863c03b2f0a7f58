#pragma once

// Random inputs and the randomized property suites shared by the unit tests
// and the acceptance binary.

#include <string>

#include "symplt/matrix.h"
#include "symplt/rng.h"

namespace support {

using symplt::Index;
using symplt::Matrix;
using symplt::RngStream;

/// U1 diag(d, 1/d) U2 with U1, U2 orthogonal symplectic and log10(d_i)
/// uniform on [-r, r]. Symplectic but in general not symmetric.
Matrix random_symplectic(Index n, double r, RngStream& rng);

Matrix random_symmetric(Index n, RngStream& rng);

/// G G^T + shift I with G standard normal.
Matrix random_spd(Index n, double shift, RngStream& rng);

/// Gaussian direction rescaled so that its exact spectral norm is `norm`.
Matrix random_perturbation(Index rows, Index cols, double norm, RngStream& rng);

/// SPD test input drawn from generator family k % 5.
struct Sample {
    std::string family;
    Matrix a;
};
Sample family_sample(int k, RngStream& rng);

struct SuiteResult {
    int trials = 0;
    int violations = 0;
    double worst = 0.0;  // largest measured/allowed ratio seen
    std::string note;
};

/// kappa_2(X) <= ||X||^2 / (1 - delta(X)) for near-symplectic X.
SuiteResult kappa_bound_suite(int trials, std::uint64_t seed);

/// delta(A + E) <= ||A||^2 (2 eps + eps^2) for symplectic A, ||E|| = eps ||A||.
SuiteResult perturbation_suite(int trials, std::uint64_t seed);

/// delta(A + E) >= (1 - eps)^2 ||A||^2 symp(A + E) on the same trial set.
SuiteResult relative_defect_suite(int trials, std::uint64_t seed);

/// Sandwich bound on both algorithms' residuals over `factorizations`
/// successful factorizations across all generator families. Also counts
/// factorizations whose (2,2) residual block is not exactly zero.
struct SandwichResult {
    SuiteResult bound;
    int failed_inputs = 0;
    int f22_nonzero = 0;
    int literal_lower_violations = 0;  // max(F) <= delta with no slack at all
};
SandwichResult sandwich_suite(int factorizations, std::uint64_t seed);

/// ||S - A11^{-1}|| / ||A11^{-1}|| for symplectic SPD inputs with
/// kappa_2(A11) <= kappa_max; `worst` is the largest ratio.
SuiteResult schur_inverse_suite(int trials, double kappa_max, double tol, std::uint64_t seed);

/// Both algorithms against [[sqrt a, 0], [b/sqrt a, 1/sqrt a]] for
/// A = [[a, b], [b, (1 + b^2)/a]].
SuiteResult oracle2x2_suite(int trials, double tol, std::uint64_t seed);

/// True when the (2,2) block of L^T J L - J is +-0 in both the blockwise and
/// the dense evaluation.
bool f22_exact_zero(const Matrix& l);

}  // namespace support
