#include "symplt/kernels.h"

#include <algorithm>

#include <omp.h>

namespace symplt::kernels {

namespace {

// c(i, :) = sum_k a(i, k) * b(k, :), k ascending.
inline void matmul_row(const Matrix& a, const Matrix& b, Matrix& c, Index i) {
    auto ci = c.row(i);
    std::fill(ci.begin(), ci.end(), 0.0);
    const auto ai = a.row(i);
    for (Index k = 0; k < a.cols(); ++k) {
        const double aik = ai[k];
        const auto bk = b.row(k);
        for (Index j = 0; j < ci.size(); ++j) ci[j] += aik * bk[j];
    }
}

inline double dot_row(const Matrix& a, Index i, std::span<const double> x) {
    const auto ai = a.row(i);
    double s = 0.0;
    for (Index k = 0; k < ai.size(); ++k) s += ai[k] * x[k];
    return s;
}

// y[j0, j1) = a(:, j0:j1)^T x, i ascending.
inline void matvec_t_cols(const Matrix& a, std::span<const double> x, std::span<double> y,
                          Index j0, Index j1) {
    std::fill(y.begin() + j0, y.begin() + j1, 0.0);
    for (Index i = 0; i < a.rows(); ++i) {
        const auto ai = a.row(i);
        const double xi = x[i];
        for (Index j = j0; j < j1; ++j) y[j] += ai[j] * xi;
    }
}

}  // namespace

namespace serial {

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
    for (Index i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    for (Index i = 0; i < a.rows(); ++i) y[i] = dot_row(a, i, x);
}

void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y) {
    matvec_t_cols(a, x, y, 0, a.cols());
}

}  // namespace serial

namespace parallel {

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
    const auto rows = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < rows; ++i) matmul_row(a, b, c, static_cast<Index>(i));
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    const auto rows = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < rows; ++i) y[i] = dot_row(a, static_cast<Index>(i), x);
}

void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y) {
    const Index cols = a.cols();
#pragma omp parallel
    {
        const auto nt = static_cast<Index>(omp_get_num_threads());
        const auto t = static_cast<Index>(omp_get_thread_num());
        const Index chunk = (cols + nt - 1) / nt;
        const Index j0 = std::min(cols, t * chunk);
        const Index j1 = std::min(cols, j0 + chunk);
        if (j0 < j1) matvec_t_cols(a, x, y, j0, j1);
    }
}

}  // namespace parallel

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
    if (a.rows() * a.cols() * b.cols() >= kParallelThreshold && !omp_in_parallel())
        parallel::matmul(a, b, c);
    else
        serial::matmul(a, b, c);
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    if (a.size() >= kParallelThreshold / 16 && !omp_in_parallel())
        parallel::matvec(a, x, y);
    else
        serial::matvec(a, x, y);
}

void matvec_transposed(const Matrix& a, std::span<const double> x, std::span<double> y) {
    if (a.size() >= kParallelThreshold / 16 && !omp_in_parallel())
        parallel::matvec_transposed(a, x, y);
    else
        serial::matvec_transposed(a, x, y);
}

}  // namespace symplt::kernels
