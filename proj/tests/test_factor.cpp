#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "support.h"
#include "symplt/factor.h"
#include "symplt/generators.h"
#include "symplt/symplectic.h"

using namespace symplt;

namespace {

Matrix example1(double t) {
    const Matrix s = oracle::s_matrix(t);
    return oracle::multiply(oracle::transposed(s), s);
}

}  // namespace

TEST_CASE("schur_complement") {
    CHECK(schur_complement(split_blocks(Matrix::identity(4))) == Matrix::identity(2));
    CHECK(schur_complement(split_blocks(Matrix{{4, 0}, {0, 0.25}})) == Matrix{{0.25}});
    const Matrix a = example1(std::numbers::pi);
    const BlockView b = split_blocks(a);
    const Matrix inv = oracle::gauss_jordan_inverse(b.a11);
    CHECK(oracle::norm2(oracle::difference(schur_complement(b), inv)) / oracle::norm2(inv) <= 1e-10);
    CHECK_THROWS_AS(schur_complement(split_blocks(Matrix{{-1, 0}, {0, 1}})),
                    NotPositiveDefiniteError);
}

TEST_CASE("factor_w1 examples") {
    const FactorizationOutput id = factor_w1(Matrix::identity(4));
    CHECK(id.factor.assemble() == Matrix::identity(4));
    CHECK(id.dec == 0.0);
    CHECK(id.algorithm == Algorithm::W1);

    const FactorizationOutput pi = factor_w1(example1(std::numbers::pi));
    CHECK(pi.dec >= 1.2107e-13);
    CHECK(pi.dec <= 1.2107e-9);

    const FactorizationOutput inv =
        factor_w1(symmetrize(oracle::gauss_jordan_inverse(example1(std::numbers::pi))));
    CHECK(inv.dec <= 1e-14);
}

TEST_CASE("factor_w2 examples") {
    const FactorizationOutput id = factor_w2(Matrix::identity(4));
    CHECK(id.factor.assemble() == Matrix::identity(4));
    CHECK(id.dec == 0.0);
    CHECK(factor_w2(example1(std::numbers::pi)).dec <= 1e-14);
    const Matrix a = example1(2.5 * std::numbers::pi);
    CHECK(factor_w2(a).dec <= 1e-13);
    CHECK(factor_w1(a).dec >= 1e-6);
}

TEST_CASE("factorization input validation") {
    CHECK_THROWS_AS(factor_w1(Matrix::identity(3)), DimensionError);
    CHECK_THROWS_AS(factor_w2(Matrix(2, 4)), DimensionError);
    CHECK_THROWS_AS(factor_w1(Matrix{{1, 0.5}, {0, 1}}), SymmetryError);
    CHECK_THROWS_AS(factor_w2(Matrix{{-1, 0}, {0, 1}}), NotPositiveDefiniteError);
    // SPD A11 but indefinite Schur complement.
    CHECK_THROWS_AS(factor_w2(Matrix{{1, 2}, {2, 1}}), NotPositiveDefiniteError);
    CHECK(parse_algorithm("w1") == Algorithm::W1);
    CHECK(parse_algorithm("W2") == Algorithm::W2);
    CHECK_THROWS_AS(parse_algorithm("w3"), DomainError);
    CHECK(to_string(Algorithm::W2) == "w2");
}

TEST_CASE("dec matches a recomputation from the inputs") {
    RngStream rng(7);
    for (int k = 0; k < 25; ++k) {
        const support::Sample s = support::family_sample(k, rng);
        for (Algorithm alg : {Algorithm::W1, Algorithm::W2}) {
            FactorizationOutput out;
            try {
                out = factorize(s.a, alg);
            } catch (const NotPositiveDefiniteError&) {
                continue;
            }
            CHECK(out.algorithm == alg);
            CHECK(decomposition_error(s.a, out.factor.assemble()) == out.dec);
            const Matrix l = out.factor.assemble();
            const double oracle_dec =
                oracle::norm2(oracle::difference(s.a, oracle::multiply(l, oracle::transposed(l)))) /
                oracle::norm2(s.a);
            // Agreement down to the rounding level of the residual itself.
            CHECK(std::abs(out.dec - oracle_dec) <= 1e-6 * oracle_dec + 1e-15);
        }
    }
}

TEST_CASE("W1 and W2 share L11 and L21 bit for bit") {
    RngStream rng(8);
    for (int k = 0; k < 40; ++k) {
        const support::Sample s = support::family_sample(k, rng);
        FactorizationOutput w1, w2;
        try {
            w1 = factor_w1(s.a);
            w2 = factor_w2(s.a);
        } catch (const NotPositiveDefiniteError&) {
            continue;
        }
        CHECK(w1.factor.l11.matrix() == w2.factor.l11.matrix());
        CHECK(w1.factor.l21 == w2.factor.l21);
        CHECK(w1.residual.f11_norm == w2.residual.f11_norm);
        for (const auto* f : {&w1, &w2}) {
            const Matrix& l22 = f->factor.l22.matrix();
            for (Index i = 0; i < l22.rows(); ++i) CHECK(l22(i, i) > 0.0);
        }
    }
}

TEST_CASE("W2 is backward stable on symplectic inputs") {
    RngStream rng(9);
    int checked = 0;
    for (int k = 0; checked < 60; ++k) {
        if (k % 5 == 4) continue;  // perturbed family is not symplectic
        const support::Sample s = support::family_sample(k, rng);
        if (condition_number(s.a) > 1e14) continue;
        ++checked;
        CHECK(factor_w2(s.a).dec <= 1e-13);
    }
}

TEST_CASE("factors of symplectic inputs are symplectic") {
    RngStream rng(10);
    for (int k = 0; k < 40; ++k) {
        if (k % 5 == 4) continue;
        const support::Sample s = support::family_sample(k, rng);
        const double kappa = condition_number(s.a);
        if (kappa > 1e14) continue;
        const double tol = 1e-6 * kappa;
        for (Algorithm alg : {Algorithm::W1, Algorithm::W2})
            CHECK(is_symplectic_blocklower(split_blocks(factorize(s.a, alg).factor.assemble()), tol));
    }
}

TEST_CASE("closed-form factor of 2x2 symplectic SPD matrices") {
    const auto r = support::oracle2x2_suite(200, 1e-14, 11);
    CHECK(r.violations == 0);
}

TEST_CASE("verify_theorem2") {
    for (Algorithm alg : {Algorithm::W1, Algorithm::W2})
        CHECK(verify_theorem2(Matrix::identity(4), factorize(Matrix::identity(4), alg), 0.0));
    const Matrix a = example1(std::numbers::pi);
    CHECK(verify_theorem2(a, factor_w2(a), 1e-12));

    // The identity needs symplecticity: with a non-symplectic SPD input the W2
    // block L22 is unrelated to L11^{-T}.
    Matrix b = Matrix::identity(4);
    b(2, 2) = b(3, 3) = 1.5;
    CHECK_FALSE(verify_theorem2(b, factor_w2(b), 1e-6));
    CHECK(verify_theorem2(b, factor_w1(b), 1e-12));
}

TEST_CASE("BlockFactor validation") {
    const TriangularFactor l(Matrix::identity(2), Orientation::Lower);
    const TriangularFactor u(Matrix::identity(2), Orientation::Upper);
    CHECK_THROWS_AS(BlockFactor(u, Matrix(2, 2), u), StructureError);
    CHECK_THROWS_AS(BlockFactor(l, Matrix(3, 2), u), DimensionError);
    const BlockFactor f(l, Matrix(2, 2, 1.0), u);
    const Matrix full = f.assemble();
    CHECK(full.block(0, 2, 2, 2) == Matrix(2, 2));
    CHECK(full.block(2, 0, 2, 2) == Matrix(2, 2, 1.0));
}
