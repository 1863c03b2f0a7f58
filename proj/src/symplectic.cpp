#include "symplt/symplectic.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace symplt {

namespace {

Index half_dimension(const Matrix& x, const char* op) {
    if (x.rows() % 2 != 0 || x.rows() == 0)
        throw DimensionError(std::string(op) + ": row count " + std::to_string(x.rows()) +
                             " is not a positive even number");
    return x.rows() / 2;
}

Index square_half_dimension(const Matrix& x, const char* op) {
    if (!x.is_square()) throw DimensionError(std::string(op) + ": matrix is not square");
    return half_dimension(x, op);
}

// a^T b - c^T d
Matrix tn_difference(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return matmul_tn(a, b) - matmul_tn(c, d);
}

void add_to_diagonal(Matrix& m, double s) {
    for (Index i = 0; i < m.rows(); ++i) m(i, i) += s;
}

}  // namespace

BlockView split_blocks(const Matrix& a) {
    const Index n = square_half_dimension(a, "split_blocks");
    return {a.block(0, 0, n, n), a.block(0, n, n, n), a.block(n, 0, n, n), a.block(n, n, n, n), n};
}

Matrix assemble_blocks(const BlockView& b) {
    const Index n = b.n;
    Matrix a(2 * n, 2 * n);
    a.set_block(0, 0, b.a11);
    a.set_block(0, n, b.a12);
    a.set_block(n, 0, b.a21);
    a.set_block(n, n, b.a22);
    return a;
}

Matrix apply_j(const Matrix& x) {
    const Index n = half_dimension(x, "apply_j");
    Matrix y(x.rows(), x.cols());
    for (Index i = 0; i < n; ++i) {
        const auto lower = x.row(n + i);
        const auto upper = x.row(i);
        auto top = y.row(i);
        auto bottom = y.row(n + i);
        for (Index j = 0; j < x.cols(); ++j) {
            top[j] = lower[j];
            bottom[j] = -upper[j];
        }
    }
    return y;
}

Matrix symplectic_form_residual(const Matrix& x) {
    const BlockView b = split_blocks(x);
    Matrix r11 = tn_difference(b.a11, b.a21, b.a21, b.a11);
    Matrix r12 = tn_difference(b.a11, b.a22, b.a21, b.a12);
    Matrix r21 = tn_difference(b.a12, b.a21, b.a22, b.a11);
    Matrix r22 = tn_difference(b.a12, b.a22, b.a22, b.a12);
    add_to_diagonal(r12, -1.0);
    add_to_diagonal(r21, 1.0);
    return assemble_blocks({std::move(r11), std::move(r12), std::move(r21), std::move(r22), b.n});
}

Matrix symplectic_form_residual_dense(const Matrix& x) {
    const Index n = square_half_dimension(x, "symplectic_form_residual_dense");
    Matrix r = matmul(transpose(x), apply_j(x));
    for (Index i = 0; i < n; ++i) {
        r(i, n + i) -= 1.0;
        r(n + i, i) += 1.0;
    }
    return r;
}

double symplectic_delta(const Matrix& x) {
    square_half_dimension(x, "symplectic_delta");
    return two_norm(symplectic_form_residual(x)).value;
}

SymplecticDefect symplecticity_defect(const Matrix& x) {
    square_half_dimension(x, "symplecticity_defect");
    const double norm_x = two_norm(x).value;
    if (norm_x == 0.0)
        throw DegenerateInputError("symplecticity_defect: zero matrix has no relative defect");
    const double delta = symplectic_delta(x);
    return {delta, delta / (norm_x * norm_x), norm_x};
}

bool is_symplectic_blocklower(const BlockView& l, double tol) {
    if (max_abs(l.a12) != 0.0)
        throw StructureError("is_symplectic_blocklower: (1,2) block is not zero");
    Matrix diag_cond = matmul_tn(l.a22, l.a11);
    add_to_diagonal(diag_cond, -1.0);
    if (two_norm(diag_cond).value > tol) return false;
    return two_norm(tn_difference(l.a21, l.a11, l.a11, l.a21)).value <= tol;
}

bool is_orthogonal_symplectic(const Matrix& q, double tol) {
    if (!q.is_square() || q.rows() % 2 != 0 || q.rows() == 0) return false;
    const BlockView b = split_blocks(q);
    if (two_norm(b.a11 - b.a22).value > tol) return false;
    if (two_norm(b.a12 + b.a21).value > tol) return false;
    Matrix qtq = matmul_tn(q, q);
    add_to_diagonal(qtq, -1.0);
    return two_norm(qtq).value <= tol;
}

Matrix symplectic_inverse(const Matrix& a) {
    square_half_dimension(a, "symplectic_inverse");
    // J^T a^T J = -(J a^T) J, and W J = -(J W^T)^T.
    const Matrix w = apply_j(transpose(a));
    return transpose(apply_j(transpose(w)));
}

FactorResidual factor_residual(const BlockFactor& l) {
    const Matrix& l11 = l.l11.matrix();
    const Matrix& l22 = l.l22.matrix();
    const Matrix f11 = tn_difference(l11, l.l21, l.l21, l11);
    Matrix f12 = matmul_tn(l11, l22);
    add_to_diagonal(f12, -1.0);
    return {two_norm(f11).value, two_norm(f12).value,
            symplecticity_defect(l.assemble()).delta};
}

double kappa_bound(const Matrix& x) {
    const SymplecticDefect d = symplecticity_defect(x);
    if (!(d.delta < 1.0))
        throw DomainError("kappa_bound: defect " + std::to_string(d.delta) +
                          " is not below 1; the bound does not apply");
    return d.norm_x * d.norm_x / (1.0 - d.delta);
}

Matrix singular_with_defect(double t, Index n) {
    if (!(t >= 1.0) || !std::isfinite(t))
        throw DomainError("singular_with_defect: t must be finite and >= 1");
    if (n == 0) throw DomainError("singular_with_defect: n must be positive");
    Matrix x(2 * n, 2 * n);
    const double d = std::sqrt(t - 1.0);
    x(0, 0) = d;
    x(n, n) = -d;
    return x;
}

double perturbation_bound(double norm_a, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("perturbation_bound: eps must lie in (0, 1)");
    if (!(norm_a > 0.0)) throw DomainError("perturbation_bound: norm_a must be positive");
    return norm_a * norm_a * (2.0 * eps + eps * eps);
}

bool sandwich_holds(const FactorResidual& r, double slack) {
    const double m = std::max(r.f11_norm, r.f12_norm);
    const double pad = slack * (1.0 + r.delta_l);
    return m <= r.delta_l + pad && r.delta_l <= 2.0 * m + pad;
}

}  // namespace symplt
