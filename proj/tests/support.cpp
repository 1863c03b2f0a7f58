#include "support.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.h"
#include "symplt/factor.h"
#include "symplt/generators.h"
#include "symplt/symplectic.h"

namespace support {

using namespace symplt;

namespace {

double uniform(RngStream& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

Index pick(RngStream& rng, Index lo, Index hi) {
    return lo + std::min<Index>(hi - lo, static_cast<Index>(rng.uniform() * double(hi - lo + 1)));
}

void note_ratio(SuiteResult& r, double measured, double allowed) {
    ++r.trials;
    const double ratio = allowed > 0 ? measured / allowed : (measured > 0 ? INFINITY : 0.0);
    r.worst = std::max(r.worst, ratio);
    if (!(measured <= allowed)) ++r.violations;
}

struct PerturbedTrial {
    Matrix a, e;
    double eps;
};

PerturbedTrial perturbed_trial(int k, RngStream& rng) {
    static constexpr double kEps[] = {1e-1, 1e-4, 1e-8};
    const Index n = pick(rng, 1, 6);
    Matrix a = random_symplectic(n, uniform(rng, 0.0, 1.0), rng);
    const double eps = kEps[k % 3];
    Matrix e = random_perturbation(2 * n, 2 * n, eps * oracle::norm2(a), rng);
    return {std::move(a), std::move(e), eps};
}

}  // namespace

Matrix random_symplectic(Index n, double r, RngStream& rng) {
    const Matrix u1 = orth_symp(n, rng);
    const Matrix u2 = orth_symp(n, rng);
    std::vector<double> g(2 * n);
    for (Index i = 0; i < n; ++i) {
        g[i] = std::pow(10.0, uniform(rng, -r, r));
        g[n + i] = 1.0 / g[i];
    }
    return matmul(matmul(u1, Matrix::diagonal(g)), u2);
}

Matrix random_symmetric(Index n, RngStream& rng) {
    Matrix m(n, n);
    for (double& x : m.data()) x = rng.normal();
    return symmetrize(m);
}

Matrix random_spd(Index n, double shift, RngStream& rng) {
    Matrix g(n, n);
    for (double& x : g.data()) x = rng.normal();
    Matrix m = symmetrize(oracle::multiply(g, oracle::transposed(g)));
    for (Index i = 0; i < n; ++i) m(i, i) += shift;
    return m;
}

Matrix random_perturbation(Index rows, Index cols, double norm, RngStream& rng) {
    Matrix e(rows, cols);
    for (double& x : e.data()) x = rng.normal();
    return (norm / oracle::norm2(e)) * e;
}

Sample family_sample(int k, RngStream& rng) {
    GeneratorSpec spec;
    spec.seed = static_cast<std::uint64_t>(rng.uniform() * 9007199254740992.0);
    switch (k % 5) {
        case 0:
            spec.family = Family::SOfT;
            spec.t = uniform(rng, -3 * std::numbers::pi, 3 * std::numbers::pi);
            return {"s_of_t", generate(spec)};
        case 1:
            spec.family = Family::GenerSymp2;
            spec.n = pick(rng, 1, 10);
            spec.s = uniform(rng, 0.0, 4.0);
            return {"gener_symp2", generate(spec)};
        case 2:
            if (rng.uniform() < 0.3) {
                spec.family = Family::Lemma4;
                spec.n = pick(rng, 1, 8);
                spec.swap_roles = rng.uniform() < 0.5;
                return {"lemma4", generate(spec)};
            } else {
                const Index n = pick(rng, 1, 8);
                const Matrix g = random_spd(n, 0.1, rng);
                return {"lemma4", lemma4_construct(g, random_symmetric(n, rng))};
            }
        case 3:
            spec.family = Family::Spectrum;
            spec.n = pick(rng, 1, 30);
            return {"spectrum", generate(spec)};
        default:
            spec.family = Family::Perturbed;
            spec.n = pick(rng, 1, 8);
            spec.s = uniform(rng, 0.0, 3.0);
            spec.t = rng.uniform() < 0.2 ? 0.0 : std::pow(10.0, uniform(rng, -8.0, 0.0));
            return {"perturbed", generate(spec)};
    }
}

SuiteResult kappa_bound_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed);
    SuiteResult r;
    int skipped = 0;
    while (r.trials < trials) {
        const Index n = pick(rng, 1, 6);
        const Matrix a = random_symplectic(n, uniform(rng, 0.0, 1.0), rng);
        const double na = oracle::norm2(a);
        // Keep delta(X) < 1: the perturbation bound stays below 0.95.
        const double eps_max = std::sqrt(1.0 + 0.95 / (na * na)) - 1.0;
        const double eps = rng.uniform() < 0.1 ? 0.0 : eps_max * rng.uniform();
        Matrix x = a;
        if (eps > 0) x += random_perturbation(2 * n, 2 * n, eps * na, rng);
        if (symplecticity_defect(x).delta >= 1.0) {
            ++skipped;
            continue;
        }
        note_ratio(r, oracle::cond2(x), kappa_bound(x) * (1 + 1e-8));
    }
    r.note = std::to_string(skipped) + " draws skipped with delta >= 1";
    return r;
}

SuiteResult perturbation_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed);
    SuiteResult r;
    for (int k = 0; k < trials; ++k) {
        const PerturbedTrial t = perturbed_trial(k, rng);
        const Matrix ahat = t.a + t.e;
        note_ratio(r, oracle::symplectic_defect(ahat),
                   perturbation_bound(oracle::norm2(t.a), t.eps));
    }
    return r;
}

SuiteResult relative_defect_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed);
    SuiteResult r;
    for (int k = 0; k < trials; ++k) {
        const PerturbedTrial t = perturbed_trial(k, rng);
        const SymplecticDefect d = symplecticity_defect(t.a + t.e);
        const double na = oracle::norm2(t.a);
        // Checked as lower <= delta, reported as a ratio lower / delta.
        note_ratio(r, (1 - t.eps) * (1 - t.eps) * na * na * d.symp_rel, d.delta);
    }
    return r;
}

bool f22_exact_zero(const Matrix& l) {
    const Index n = l.rows() / 2;
    const Matrix blockwise = symplectic_form_residual(l);
    const Matrix dense = symplectic_form_residual_dense(l);
    for (Index i = n; i < 2 * n; ++i)
        for (Index j = n; j < 2 * n; ++j)
            if (blockwise(i, j) != 0.0 || dense(i, j) != 0.0) return false;
    return true;
}

SandwichResult sandwich_suite(int factorizations, std::uint64_t seed) {
    RngStream rng(seed);
    SandwichResult out;
    for (int k = 0; out.bound.trials < factorizations; ++k) {
        const Sample s = family_sample(k, rng);
        for (Algorithm alg : {Algorithm::W1, Algorithm::W2}) {
            if (out.bound.trials >= factorizations) break;
            FactorizationOutput f;
            try {
                f = factorize(s.a, alg);
            } catch (const Error&) {
                ++out.failed_inputs;
                continue;
            }
            const FactorResidual& res = f.residual;
            const double fmax = std::max(res.f11_norm, res.f12_norm);
            ++out.bound.trials;
            if (!sandwich_holds(res)) {
                ++out.bound.violations;
                if (out.bound.note.empty())
                    out.bound.note = s.family + " " + std::string(to_string(alg));
            }
            if (fmax > res.delta_l) ++out.literal_lower_violations;
            if (fmax > 0) out.bound.worst = std::max(out.bound.worst, res.delta_l / (2 * fmax));
            if (!f22_exact_zero(f.factor.assemble())) ++out.f22_nonzero;
        }
    }
    return out;
}

SuiteResult schur_inverse_suite(int trials, double kappa_max, double tol, std::uint64_t seed) {
    RngStream rng(seed);
    SuiteResult r;
    int drawn = 0;
    while (r.trials < trials) {
        ++drawn;
        GeneratorSpec spec;
        spec.seed = drawn;
        if (drawn % 2 == 0) {
            spec.family = Family::SOfT;
            spec.t = uniform(rng, -2.5 * std::numbers::pi, 2.5 * std::numbers::pi);
        } else {
            spec.family = Family::GenerSymp2;
            spec.n = pick(rng, 1, 8);
            spec.s = uniform(rng, 0.0, 3.0);
        }
        const Matrix a = generate(spec);
        const BlockView b = split_blocks(a);
        if (oracle::cond2(b.a11) > kappa_max) continue;
        const Matrix inv = oracle::gauss_jordan_inverse(b.a11);
        const double ratio =
            oracle::norm2(oracle::difference(schur_complement(b), inv)) / oracle::norm2(inv);
        note_ratio(r, ratio, tol);
    }
    r.worst *= tol;  // report the raw ratio
    return r;
}

SuiteResult oracle2x2_suite(int trials, double tol, std::uint64_t seed) {
    RngStream rng(seed);
    SuiteResult r;
    for (int k = 0; k < trials; ++k) {
        const double a = uniform(rng, 0.5, 2.0), b = uniform(rng, -1.0, 1.0);
        const Matrix m{{a, b}, {b, (1 + b * b) / a}};
        const double ra = std::sqrt(a);
        const Matrix closed{{ra, 0}, {b / ra, 1 / ra}};
        double diff = 0;
        for (Algorithm alg : {Algorithm::W1, Algorithm::W2})
            diff = std::max(diff, oracle::max_abs_diff(factorize(m, alg).factor.assemble(), closed));
        note_ratio(r, diff, tol);
    }
    r.worst *= tol;
    return r;
}

}  // namespace support
