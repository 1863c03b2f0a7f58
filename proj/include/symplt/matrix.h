#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "symplt/error.h"

namespace symplt {

using Index = std::size_t;

/// Dense real matrix, row-major, 64-bit entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(Index rows, Index cols, double fill = 0.0);
    Matrix(Index rows, Index cols, std::vector<double> data);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(Index n);
    static Matrix zeros(Index rows, Index cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const double> diag);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    Index size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(Index i, Index j) noexcept { return data_[i * cols_ + j]; }
    double operator()(Index i, Index j) const noexcept { return data_[i * cols_ + j]; }

    std::span<double> row(Index i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(Index i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    /// Copy of the nr x nc block whose top-left corner is (r0, c0).
    Matrix block(Index r0, Index c0, Index nr, Index nc) const;
    void set_block(Index r0, Index c0, const Matrix& b);

    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    Matrix& operator*=(double s) noexcept;

    /// Bit-exact comparison of shape and entries.
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(double s, Matrix a);

/// Complex matrix stored as separate real and imaginary parts.
struct ComplexMatrix {
    ComplexMatrix() = default;
    ComplexMatrix(Index rows, Index cols) : re(rows, cols), im(rows, cols) {}
    ComplexMatrix(Matrix real, Matrix imag);

    Index rows() const noexcept { return re.rows(); }
    Index cols() const noexcept { return re.cols(); }

    Matrix re;
    Matrix im;
};

/// Result of a spectral-norm estimate.
struct NormReport {
    double value = 0.0;
    int iterations = 0;
    bool converged = true;
};

inline constexpr double kPowerIterationTol = 1e-12;
inline constexpr int kPowerIterationMaxIter = 5000;
inline constexpr unsigned long long kPowerIterationSeed = 0x5eed;

/// Product a*b. Every entry is accumulated left to right in index order, so
/// the result does not depend on the number of threads.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// a^T * b without materialising a^T for the caller.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
bool all_finite(const Matrix& a);

/// max |a_ij - a_ji| <= rel_tol * max |a_ij|.
bool is_symmetric(const Matrix& a, double rel_tol);
/// (a + a^T) / 2; the result is symmetric bit-for-bit.
Matrix symmetrize(const Matrix& a);

/// Solves l*X = b column by column; only the lower triangle of l is read.
Matrix forward_substitution(const Matrix& l, const Matrix& b);

/// Spectral norm by power iteration on a^T a, applied as two matrix-vector
/// products per step, from a fixed pseudo-random start vector with entries in
/// (0.5, 1.5). Stops when successive Rayleigh quotients agree to
/// kPowerIterationTol (relative) or after kPowerIterationMaxIter steps. An
/// unconverged estimate is refined by a short Lanczos run from the last
/// iterate and `converged` stays false.
NormReport two_norm(const Matrix& a);

/// Solves a*X = b by LU with partial pivoting. Throws SingularError on an
/// exactly zero pivot.
Matrix lu_solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);

/// kappa_2(a) = ||a||_2 * ||a^{-1}||_2 with the inverse from lu_solve.
double condition_number(const Matrix& a);

/// Unitary factor Q of a Householder QR of m. R is discarded.
ComplexMatrix complex_qr_q(const ComplexMatrix& m);

/// P^T m P with P the index-reversal permutation: (i,j) -> (n-1-i, n-1-j).
Matrix reversal_permute(const Matrix& m);

}  // namespace symplt
