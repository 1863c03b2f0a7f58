#include "symplt/matrix.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "symplt/kernels.h"
#include "symplt/rng.h"

namespace symplt {

namespace {

std::string shape(const Matrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
}

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square())
        throw DimensionError(std::string(op) + ": matrix is not square (" + shape(a) + ")");
}

// Fixed pseudo-random unit vector. An all-ones start is an exact eigenvector
// of every persymmetric matrix with equal row sums, which hides the dominant
// singular pair of e.g. the inverse of a 2x2 block of S(t)^T S(t).
std::vector<double> power_iteration_start(Index n) {
    RngStream rng(kPowerIterationSeed);
    std::vector<double> v(n);
    double norm2 = 0.0;
    for (double& x : v) {
        x = 0.5 + rng.uniform();
        norm2 += x * x;
    }
    const double norm = std::sqrt(norm2);
    for (double& x : v) x /= norm;
    return v;
}

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (Index i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Largest eigenvalue of the symmetric tridiagonal matrix (alpha, beta) by
// Sturm-sequence bisection.
double tridiagonal_top(const std::vector<double>& alpha, const std::vector<double>& beta) {
    const Index k = alpha.size();
    double lo = 0.0, hi = 0.0;
    for (Index i = 0; i < k; ++i) {
        const double r = (i > 0 ? std::abs(beta[i - 1]) : 0.0) + (i + 1 < k ? std::abs(beta[i]) : 0.0);
        hi = std::max(hi, alpha[i] + r);
        lo = std::min(lo, alpha[i] - r);
    }
    // Number of eigenvalues below x.
    auto count_below = [&](double x) {
        Index count = 0;
        double d = 1.0;
        for (Index i = 0; i < k; ++i) {
            const double b2 = i > 0 ? beta[i - 1] * beta[i - 1] : 0.0;
            d = alpha[i] - x - (i > 0 ? b2 / d : 0.0);
            if (d == 0.0) d = -std::numeric_limits<double>::min();
            if (d < 0.0) ++count;
        }
        return count;
    };
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::abs(hi);
         ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(mid) == k)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Lanczos on a^T a from the unit vector v with full reorthogonalisation.
// Returns the largest Ritz value, a lower bound on ||a||_2^2 that converges
// far faster than power iteration when the top singular values cluster.
double lanczos_top(const Matrix& a, const std::vector<double>& v0) {
    constexpr Index kMaxSteps = 64;
    const Index n = a.cols();
    const Index steps = std::min(n, kMaxSteps);
    std::vector<std::vector<double>> basis{v0};
    std::vector<double> alpha, beta, w(a.rows()), z(n);
    for (Index k = 0; k < steps; ++k) {
        const std::vector<double>& q = basis.back();
        kernels::matvec(a, q, w);
        kernels::matvec_transposed(a, w, z);
        alpha.push_back(dot(q, z));
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const double c = dot(b, z);
                for (Index j = 0; j < n; ++j) z[j] -= c * b[j];
            }
        const double nz = std::sqrt(dot(z, z));
        if (k + 1 == steps || nz <= 1e-14 * std::abs(alpha.front())) break;
        beta.push_back(nz);
        for (double& x : z) x /= nz;
        basis.push_back(z);
    }
    return tridiagonal_top(alpha, beta);
}

}  // namespace

Matrix::Matrix(Index rows, Index cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(Index rows, Index cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("Matrix: data length " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows) + "x" +
                             std::to_string(cols));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (Index i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::block(Index r0, Index c0, Index nr, Index nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionError("block: out of range");
    Matrix b(nr, nc);
    for (Index i = 0; i < nr; ++i)
        std::copy_n(data_.begin() + (r0 + i) * cols_ + c0, nc, b.data_.begin() + i * nc);
    return b;
}

void Matrix::set_block(Index r0, Index c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw DimensionError("set_block: out of range");
    for (Index i = 0; i < b.rows_; ++i)
        std::copy_n(b.data_.begin() + i * b.cols_, b.cols_,
                    data_.begin() + (r0 + i) * cols_ + c0);
}

Matrix& Matrix::operator+=(const Matrix& b) {
    require_same_shape(*this, b, "operator+");
    for (Index i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
    require_same_shape(*this, b, "operator-");
    for (Index i = 0; i < data_.size(); ++i) data_[i] -= b.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) noexcept {
    for (double& x : data_) x *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) {
    for (double& x : a.data()) x = -x;
    return a;
}
Matrix operator*(double s, Matrix a) { return a *= s; }

ComplexMatrix::ComplexMatrix(Matrix real, Matrix imag) : re(std::move(real)), im(std::move(imag)) {
    require_same_shape(re, im, "ComplexMatrix");
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions differ (" + shape(a) + " * " + shape(b) + ")");
    Matrix c(a.rows(), b.cols());
    kernels::matmul(a, b, c);
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) { return matmul(transpose(a), b); }

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

bool all_finite(const Matrix& a) {
    return std::all_of(a.data().begin(), a.data().end(), [](double x) { return std::isfinite(x); });
}

bool is_symmetric(const Matrix& a, double rel_tol) {
    if (!a.is_square()) return false;
    double diff = 0.0;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = i + 1; j < a.cols(); ++j) diff = std::max(diff, std::abs(a(i, j) - a(j, i)));
    return diff <= rel_tol * max_abs(a);
}

Matrix symmetrize(const Matrix& a) {
    require_square(a, "symmetrize");
    Matrix s(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) s(i, j) = (a(i, j) + a(j, i)) / 2.0;
    return s;
}

Matrix forward_substitution(const Matrix& l, const Matrix& b) {
    require_square(l, "forward_substitution");
    if (b.rows() != l.rows())
        throw DimensionError("forward_substitution: right-hand side has " +
                             std::to_string(b.rows()) + " rows, expected " +
                             std::to_string(l.rows()));
    const Index n = l.rows();
    for (Index i = 0; i < n; ++i) {
        const double d = l(i, i);
        if (d == 0.0 || !std::isfinite(d))
            throw SingularError("forward_substitution: singular triangular matrix", i);
    }
    Matrix x(n, b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
        for (Index i = 0; i < n; ++i) {
            double s = b(i, j);
            for (Index k = 0; k < i; ++k) s -= l(i, k) * x(k, j);
            x(i, j) = s / l(i, i);
        }
    }
    return x;
}

NormReport two_norm(const Matrix& a) {
    if (a.empty() || max_abs(a) == 0.0) return {0.0, 0, true};

    const Index n = a.cols();
    std::vector<double> v = power_iteration_start(n);
    std::vector<double> w(a.rows());
    std::vector<double> z(n);

    bool restarted = false;
    double lambda_prev = 0.0;
    NormReport report{0.0, 0, false};
    for (int it = 1; it <= kPowerIterationMaxIter; ++it) {
        kernels::matvec(a, v, w);
        const double lambda = dot(w, w);
        if (lambda == 0.0 && !restarted) {
            // Start vector lies in the null space; restart from the column
            // of largest norm.
            Index best = 0;
            double best_norm = -1.0;
            for (Index j = 0; j < n; ++j) {
                double s = 0.0;
                for (Index i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
                if (s > best_norm) {
                    best_norm = s;
                    best = j;
                }
            }
            std::fill(v.begin(), v.end(), 0.0);
            v[best] = 1.0;
            restarted = true;
            continue;
        }
        report.iterations = it;
        report.value = std::sqrt(lambda);
        if (it > 1 && std::abs(lambda - lambda_prev) <= kPowerIterationTol * lambda) {
            report.converged = true;
            break;
        }
        lambda_prev = lambda;

        kernels::matvec_transposed(a, w, z);
        const double nz = std::sqrt(dot(z, z));
        if (nz == 0.0) {
            report.converged = true;
            break;
        }
        for (Index j = 0; j < n; ++j) v[j] = z[j] / nz;
    }
    if (!report.converged) {
        const double ritz = lanczos_top(a, v);
        if (ritz > report.value * report.value) report.value = std::sqrt(ritz);
    }
    return report;
}

namespace {

struct LuFactors {
    Matrix lu;
    std::vector<Index> perm;
};

LuFactors lu_factor(const Matrix& a) {
    require_square(a, "lu_solve");
    const Index n = a.rows();
    LuFactors f{a, std::vector<Index>(n)};
    std::iota(f.perm.begin(), f.perm.end(), Index{0});
    Matrix& u = f.lu;
    for (Index k = 0; k < n; ++k) {
        Index p = k;
        double best = std::abs(u(k, k));
        for (Index i = k + 1; i < n; ++i) {
            if (std::abs(u(i, k)) > best) {
                best = std::abs(u(i, k));
                p = i;
            }
        }
        if (best == 0.0 || !std::isfinite(best))
            throw SingularError("lu_solve: matrix is singular", k);
        if (p != k) {
            std::swap_ranges(u.row(k).begin(), u.row(k).end(), u.row(p).begin());
            std::swap(f.perm[k], f.perm[p]);
        }
        const double pivot = u(k, k);
        for (Index i = k + 1; i < n; ++i) {
            const double m = u(i, k) / pivot;
            u(i, k) = m;
            for (Index j = k + 1; j < n; ++j) u(i, j) -= m * u(k, j);
        }
    }
    return f;
}

}  // namespace

Matrix lu_solve(const Matrix& a, const Matrix& b) {
    if (b.rows() != a.rows())
        throw DimensionError("lu_solve: right-hand side has " + std::to_string(b.rows()) +
                             " rows, expected " + std::to_string(a.rows()));
    const auto [lu, perm] = lu_factor(a);
    const Index n = a.rows();
    const Index m = b.cols();

    Matrix x(n, m);
    for (Index i = 0; i < n; ++i) std::copy_n(b.row(perm[i]).begin(), m, x.row(i).begin());

    for (Index i = 0; i < n; ++i) {
        auto xi = x.row(i);
        for (Index k = 0; k < i; ++k) {
            const double lik = lu(i, k);
            const auto xk = x.row(k);
            for (Index j = 0; j < m; ++j) xi[j] -= lik * xk[j];
        }
    }
    for (Index i = n; i-- > 0;) {
        auto xi = x.row(i);
        for (Index k = i + 1; k < n; ++k) {
            const double uik = lu(i, k);
            const auto xk = x.row(k);
            for (Index j = 0; j < m; ++j) xi[j] -= uik * xk[j];
        }
        const double d = lu(i, i);
        for (Index j = 0; j < m; ++j) xi[j] /= d;
    }
    return x;
}

Matrix inverse(const Matrix& a) { return lu_solve(a, Matrix::identity(a.rows())); }

double condition_number(const Matrix& a) {
    require_square(a, "condition_number");
    return two_norm(a).value * two_norm(inverse(a)).value;
}

ComplexMatrix complex_qr_q(const ComplexMatrix& m) {
    using cplx = std::complex<double>;
    if (m.rows() != m.cols())
        throw DimensionError("complex_qr_q: matrix is not square");
    const Index n = m.rows();

    std::vector<cplx> a(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) a[i * n + j] = {m.re(i, j), m.im(i, j)};

    // Reflector k is H_k = I - beta_k v_k v_k^H acting on rows k..n-1.
    std::vector<std::vector<cplx>> vs(n);
    std::vector<double> betas(n, 0.0);
    for (Index k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (Index i = k; i < n; ++i) norm2 += std::norm(a[i * n + k]);
        if (norm2 == 0.0) continue;
        const double normx = std::sqrt(norm2);
        const cplx x0 = a[k * n + k];
        const cplx phase = std::abs(x0) == 0.0 ? cplx{1.0, 0.0} : x0 / std::abs(x0);
        const cplx alpha = -phase * normx;

        std::vector<cplx> v(n - k);
        for (Index i = k; i < n; ++i) v[i - k] = a[i * n + k];
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (const cplx& vi : v) vnorm2 += std::norm(vi);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        for (Index c = k; c < n; ++c) {
            cplx s{0.0, 0.0};
            for (Index i = k; i < n; ++i) s += std::conj(v[i - k]) * a[i * n + c];
            s *= beta;
            for (Index i = k; i < n; ++i) a[i * n + c] -= s * v[i - k];
        }
        vs[k] = std::move(v);
        betas[k] = beta;
    }

    // Q = H_0 H_1 ... H_{n-1}, accumulated from the right onto the identity.
    std::vector<cplx> q(n * n, cplx{0.0, 0.0});
    for (Index i = 0; i < n; ++i) q[i * n + i] = 1.0;
    for (Index k = n; k-- > 0;) {
        if (betas[k] == 0.0) continue;
        const auto& v = vs[k];
        for (Index c = 0; c < n; ++c) {
            cplx s{0.0, 0.0};
            for (Index i = k; i < n; ++i) s += std::conj(v[i - k]) * q[i * n + c];
            s *= betas[k];
            for (Index i = k; i < n; ++i) q[i * n + c] -= s * v[i - k];
        }
    }

    ComplexMatrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            out.re(i, j) = q[i * n + j].real();
            out.im(i, j) = q[i * n + j].imag();
        }
    return out;
}

Matrix reversal_permute(const Matrix& m) {
    require_square(m, "reversal_permute");
    const Index n = m.rows();
    Matrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, n - 1 - j);
    return out;
}

}  // namespace symplt
