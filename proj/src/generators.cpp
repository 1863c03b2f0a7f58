#include "symplt/generators.h"

#include <cmath>
#include <string>

#include <json.hpp>

#include "symplt/cholesky.h"

namespace symplt {

namespace {

// u diag(g) u^T, symmetrized.
Matrix congruence_diag(const Matrix& u, std::span<const double> g) {
    Matrix ug = u;
    for (Index i = 0; i < ug.rows(); ++i)
        for (Index j = 0; j < ug.cols(); ++j) ug(i, j) *= g[j];
    return symmetrize(matmul(ug, transpose(u)));
}

std::vector<double> with_reciprocals(const std::vector<double>& d) {
    std::vector<double> g = d;
    for (double x : d) g.push_back(1.0 / x);
    return g;
}

void require_positive(Index n, const char* op) {
    if (n == 0) throw DomainError(std::string(op) + ": size must be positive");
}

}  // namespace

Matrix s_of_t(double t) {
    if (!std::isfinite(t)) throw DomainError("s_of_t: t must be finite");
    const double c = std::cosh(t);
    const double s = std::sinh(t);
    if (!std::isfinite(c) || !std::isfinite(s))
        throw OverflowError("s_of_t: cosh(" + std::to_string(t) + ") overflows");
    return Matrix{{c, s, 0.0, s}, {s, c, s, 0.0}, {0.0, 0.0, c, -s}, {0.0, 0.0, -s, c}};
}

Matrix hilbert(Index m) {
    require_positive(m, "hilbert");
    Matrix h(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
    return h;
}

Matrix beta_matrix(Index m) {
    if (m == 0 || m > kBetaMatrixMaxOrder)
        throw DomainError("beta_matrix: order must lie in [1, " +
                          std::to_string(kBetaMatrixMaxOrder) + "]");
    Matrix b(m, m);
    for (Index i = 1; i <= m; ++i) {
        b(i - 1, 0) = static_cast<double>(i);
        for (Index j = 2; j <= i; ++j)
            b(i - 1, j - 1) = b(i - 1, j - 2) * static_cast<double>(i + j - 1) /
                              static_cast<double>(j - 1);
    }
    for (Index i = 0; i < m; ++i)
        for (Index j = i + 1; j < m; ++j) b(i, j) = b(j, i);
    return b;
}

std::vector<double> descending_logspace(Index n, double s) {
    require_positive(n, "descending_logspace");
    std::vector<double> d(n);
    if (n == 1) {
        d[0] = std::pow(10.0, s);
        return d;
    }
    for (Index k = 0; k < n; ++k) {
        const double exponent = s * static_cast<double>(k) / static_cast<double>(n - 1);
        d[n - 1 - k] = std::pow(10.0, exponent);
    }
    return d;
}

Matrix orth_symp(Index n, RngStream& rng) {
    require_positive(n, "orth_symp");
    ComplexMatrix m(n, n);
    for (double& x : m.re.data()) x = rng.normal();
    for (double& x : m.im.data()) x = rng.normal();
    const ComplexMatrix u = complex_qr_q(m);
    Matrix q(2 * n, 2 * n);
    q.set_block(0, 0, u.re);
    q.set_block(0, n, u.im);
    q.set_block(n, 0, -u.im);
    q.set_block(n, n, u.re);
    return q;
}

Matrix gener_symp2(Index n, double s, RngStream& rng) {
    if (!(s >= 0.0)) throw DomainError("gener_symp2: s must be nonnegative");
    const std::vector<double> g = with_reciprocals(descending_logspace(n, s));
    const Matrix u = orth_symp(n, rng);
    return congruence_diag(u, g);
}

Matrix lemma4_construct(const Matrix& g, const Matrix& c) {
    if (!g.is_square() || !c.is_square() || g.rows() != c.rows())
        throw DimensionError("lemma4_construct: G and C must be square of equal order");
    if (!is_symmetric(c, kSymmetryTol)) throw SymmetryError("lemma4_construct: C is not symmetric");
    try {
        cholesky_lower(g);
    } catch (const NotPositiveDefiniteError&) {
        throw DomainError("lemma4_construct: G is not positive definite");
    } catch (const SymmetryError&) {
        throw DomainError("lemma4_construct: G is not symmetric");
    }
    const Index n = g.rows();
    const Matrix g_inv = symmetrize(inverse(g));

    Matrix p = Matrix::identity(2 * n);
    p.set_block(n, 0, c);
    Matrix d(2 * n, 2 * n);
    d.set_block(0, 0, g);
    d.set_block(n, n, g_inv);
    return symmetrize(matmul(matmul(p, d), transpose(p)));
}

Matrix random_spectrum_symplectic(Index n, RngStream& rng) {
    require_positive(n, "random_spectrum_symplectic");
    std::vector<double> d(n);
    for (double& x : d) x = rng.uniform();
    const std::vector<double> g = with_reciprocals(d);
    const Matrix u = orth_symp(n, rng);
    return congruence_diag(u, g);
}

Matrix perturbed_symplectic(Index n, double s, double t, RngStream& rng) {
    if (!(t >= 0.0)) throw DomainError("perturbed_symplectic: t must be nonnegative");
    Matrix a = gener_symp2(n, s, rng);
    if (t != 0.0) a += t * hilbert(2 * n);
    return a;
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::SOfT: return "s_of_t";
        case Family::GenerSymp2: return "gener_symp2";
        case Family::Lemma4: return "lemma4";
        case Family::Spectrum: return "spectrum";
        case Family::Perturbed: return "perturbed";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::SOfT, Family::GenerSymp2, Family::Lemma4, Family::Spectrum,
                     Family::Perturbed})
        if (to_string(f) == name) return f;
    throw DomainError("unknown generator family '" + std::string(name) + "'");
}

std::string to_json(const GeneratorSpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(spec.family));
    j["n"] = spec.n;
    j["s"] = spec.s;
    j["t"] = spec.t;
    j["seed"] = spec.seed;
    if (spec.swap_roles) j["swap_roles"] = true;
    return j.dump();
}

GeneratorSpec parse_generator_spec(std::string_view json, const GeneratorSpec& fallback) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("generator descriptor: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("generator descriptor: expected a JSON object");
    GeneratorSpec spec = fallback;
    try {
        if (j.contains("family")) spec.family = parse_family(j.at("family").get<std::string>());
        if (j.contains("n")) {
            const auto n = j.at("n").get<long long>();
            if (n <= 0) throw DomainError("generator descriptor: n must be positive");
            spec.n = static_cast<Index>(n);
        }
        if (j.contains("s")) spec.s = j.at("s").get<double>();
        if (j.contains("t")) spec.t = j.at("t").get<double>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("swap_roles")) spec.swap_roles = j.at("swap_roles").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("generator descriptor: ") + e.what());
    }
    return spec;
}

Matrix generate(const GeneratorSpec& spec) {
    RngStream rng(spec.seed);
    switch (spec.family) {
        case Family::SOfT: {
            const Matrix s = s_of_t(spec.t);
            return matmul(transpose(s), s);
        }
        case Family::GenerSymp2: return gener_symp2(spec.n, spec.s, rng);
        case Family::Lemma4:
            return spec.swap_roles ? lemma4_construct(hilbert(spec.n), beta_matrix(spec.n))
                                   : lemma4_construct(beta_matrix(spec.n), hilbert(spec.n));
        case Family::Spectrum: return random_spectrum_symplectic(spec.n, rng);
        case Family::Perturbed: return perturbed_symplectic(spec.n, spec.s, spec.t, rng);
    }
    throw DomainError("generate: unknown family");
}

}  // namespace symplt
