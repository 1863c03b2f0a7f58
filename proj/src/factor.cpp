#include "symplt/factor.h"

#include <string>
#include <utility>

namespace symplt {

BlockFactor::BlockFactor(TriangularFactor l11_, Matrix l21_, TriangularFactor l22_)
    : l11(std::move(l11_)), l21(std::move(l21_)), l22(std::move(l22_)) {
    if (l11.orientation() != Orientation::Lower || l22.orientation() != Orientation::Upper)
        throw StructureError("BlockFactor: expected lower L11 and upper L22");
    const Index n = l11.size();
    if (l22.size() != n || l21.rows() != n || l21.cols() != n)
        throw DimensionError("BlockFactor: blocks have inconsistent sizes");
}

Matrix BlockFactor::assemble() const {
    const Index n = this->n();
    Matrix l(2 * n, 2 * n);
    l.set_block(0, 0, l11.matrix());
    l.set_block(n, 0, l21);
    l.set_block(n, n, l22.matrix());
    return l;
}

namespace {

struct LeadingBlocks {
    BlockView a;
    TriangularFactor l11;
    Matrix l21;
};

// Steps shared by W1 and W2: chol(A11) and L21^T = L11^{-1} A12.
LeadingBlocks leading_blocks(const Matrix& a) {
    if (!a.is_square() || a.rows() % 2 != 0 || a.rows() == 0)
        throw DimensionError("factorization: expected a square matrix of even order, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    if (!is_symmetric(a, kSymmetryTol))
        throw SymmetryError("factorization: matrix is not symmetric");
    LeadingBlocks lb{split_blocks(symmetrize(a)), {}, {}};
    lb.l11 = cholesky_lower(lb.a.a11);
    lb.l21 = transpose(forward_substitution(lb.l11.matrix(), lb.a.a12));
    return lb;
}

Matrix schur_from(const Matrix& a22, const Matrix& l21) {
    return symmetrize(a22 - matmul(l21, transpose(l21)));
}

FactorizationOutput finish(const Matrix& a, BlockFactor factor, Algorithm algorithm) {
    FactorizationOutput out;
    out.dec = decomposition_error(a, factor.assemble());
    out.residual = factor_residual(factor);
    out.factor = std::move(factor);
    out.algorithm = algorithm;
    return out;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept { return a == Algorithm::W1 ? "w1" : "w2"; }

Algorithm parse_algorithm(std::string_view s) {
    if (s == "w1" || s == "W1") return Algorithm::W1;
    if (s == "w2" || s == "W2") return Algorithm::W2;
    throw DomainError("unknown algorithm '" + std::string(s) + "' (expected w1 or w2)");
}

double decomposition_error(const Matrix& a, const Matrix& l) {
    return two_norm(a - matmul(l, transpose(l))).value / two_norm(a).value;
}

Matrix schur_complement(const BlockView& a) {
    const TriangularFactor l11 = cholesky_lower(a.a11);
    const Matrix l21 = transpose(forward_substitution(l11.matrix(), a.a12));
    return schur_from(a.a22, l21);
}

FactorizationOutput factor_w1(const Matrix& a) {
    LeadingBlocks lb = leading_blocks(a);
    TriangularFactor l22(invert_lower_transpose(lb.l11), Orientation::Upper);
    return finish(a, BlockFactor(std::move(lb.l11), std::move(lb.l21), std::move(l22)),
                  Algorithm::W1);
}

FactorizationOutput factor_w2(const Matrix& a) {
    LeadingBlocks lb = leading_blocks(a);
    TriangularFactor l22 = reverse_cholesky(schur_from(lb.a.a22, lb.l21));
    return finish(a, BlockFactor(std::move(lb.l11), std::move(lb.l21), std::move(l22)),
                  Algorithm::W2);
}

FactorizationOutput factorize(const Matrix& a, Algorithm algorithm) {
    return algorithm == Algorithm::W1 ? factor_w1(a) : factor_w2(a);
}

bool verify_theorem2(const Matrix& a, const FactorizationOutput& out, double tol) {
    const Matrix expected = invert_lower_transpose(out.factor.l11);
    const double diff = two_norm(out.factor.l22.matrix() - expected).value;
    const Index n = out.factor.n();
    return diff <= tol * condition_number(a.block(0, 0, n, n));
}

}  // namespace symplt
