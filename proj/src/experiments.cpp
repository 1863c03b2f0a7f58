#include "symplt/experiments.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <utility>

#include "symplt/factor.h"
#include "symplt/generators.h"
#include "symplt/symplectic.h"

namespace symplt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append_failure(ExperimentStats& row, const std::string& what) {
    if (!row.failure.empty()) row.failure += "; ";
    row.failure += what;
}

void fill_algorithm(ExperimentStats& row, const Matrix& a, Algorithm alg) {
    const bool w1 = alg == Algorithm::W1;
    double& dec = w1 ? row.dec_w1 : row.dec_w2;
    double& symp_l = w1 ? row.symp_l_w1 : row.symp_l_w2;
    double& delta_l = w1 ? row.delta_l_w1 : row.delta_l_w2;
    double& f12 = w1 ? row.f12_w1 : row.f12_w2;
    try {
        const FactorizationOutput out = factorize(a, alg);
        const double norm_l = two_norm(out.factor.assemble()).value;
        dec = out.dec;
        delta_l = out.residual.delta_l;
        symp_l = out.residual.delta_l / (norm_l * norm_l);
        f12 = out.residual.f12_norm;
        // F11 only depends on L11 and L21, which both algorithms share.
        if (w1 || std::isnan(row.f11_norm)) row.f11_norm = out.residual.f11_norm;
    } catch (const Error& e) {
        dec = symp_l = delta_l = f12 = kNaN;
        append_failure(row, std::string(to_string(alg)) + ": " + e.what());
    }
}

std::string t_label(double t) {
    const double halves = t / (std::numbers::pi / 2.0);
    const double k = std::round(halves);
    if (t != 0.0 && k != 0.0 && std::abs(halves - k) <= 1e-12 * std::abs(k)) {
        const auto ki = static_cast<long long>(k);
        if (ki % 2 == 0) return ki == 2 ? "t=pi" : "t=" + std::to_string(ki / 2) + "pi";
        return "t=" + std::to_string(ki) + "pi/2";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "t=%g", t);
    return buf;
}

std::string n_label(Index n) { return "n=" + std::to_string(n); }

// Rows are independent; each one builds its own matrix so evaluation order
// never changes the output.
template <typename MakeRow>
std::vector<ExperimentStats> sweep(Index count, MakeRow make_row) {
    std::vector<ExperimentStats> rows(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) rows[i] = make_row(static_cast<Index>(i));
    return rows;
}

template <typename Build>
ExperimentStats guarded_row(std::string label, double x, Build build) {
    try {
        return compute_stats(label, x, build());
    } catch (const Error& e) {
        ExperimentStats row;
        row.label = std::move(label);
        row.x = x;
        for (const auto& f : stat_fields()) row.*f.member = kNaN;
        append_failure(row, e.what());
        return row;
    }
}

Matrix example1_matrix(double t) {
    const Matrix s = s_of_t(t);
    return matmul(transpose(s), s);
}

}  // namespace

const std::vector<StatField>& stat_fields() {
    static const std::vector<StatField> fields{
        {"kappa_a", "κ₂(A)", &ExperimentStats::kappa_a},
        {"kappa_a11", "κ₂(A₁₁)", &ExperimentStats::kappa_a11},
        {"dec_w1", "dec_W₁", &ExperimentStats::dec_w1},
        {"dec_w2", "dec_W₂", &ExperimentStats::dec_w2},
        {"symp_a", "sympA", &ExperimentStats::symp_a},
        {"symp_l_w1", "sympL_W₁", &ExperimentStats::symp_l_w1},
        {"symp_l_w2", "sympL_W₂", &ExperimentStats::symp_l_w2},
        {"delta_a", "Δ(A)", &ExperimentStats::delta_a},
        {"delta_l_w1", "ΔL_W₁", &ExperimentStats::delta_l_w1},
        {"delta_l_w2", "ΔL_W₂", &ExperimentStats::delta_l_w2},
        {"f11_norm", "‖F₁₁‖", &ExperimentStats::f11_norm},
        {"f12_w1", "‖F₁₂‖ from W₁", &ExperimentStats::f12_w1},
        {"f12_w2", "‖F₁₂‖ from W₂", &ExperimentStats::f12_w2},
    };
    return fields;
}

ExperimentStats compute_stats(std::string label, double x, const Matrix& a) {
    ExperimentStats row;
    row.label = std::move(label);
    row.x = x;
    row.f11_norm = kNaN;

    try {
        row.kappa_a = condition_number(a);
    } catch (const Error& e) {
        row.kappa_a = kNaN;
        append_failure(row, std::string("kappa(A): ") + e.what());
    }
    try {
        const Index n = a.rows() / 2;
        row.kappa_a11 = condition_number(a.block(0, 0, n, n));
    } catch (const Error& e) {
        row.kappa_a11 = kNaN;
        append_failure(row, std::string("kappa(A11): ") + e.what());
    }
    const SymplecticDefect d = symplecticity_defect(a);
    row.delta_a = d.delta;
    row.symp_a = d.symp_rel;

    fill_algorithm(row, a, Algorithm::W1);
    fill_algorithm(row, a, Algorithm::W2);
    return row;
}

std::vector<double> default_t_grid() {
    constexpr double pi = std::numbers::pi;
    return {pi, 1.5 * pi, 2.0 * pi, 2.5 * pi};
}

std::vector<double> default_example3_t_grid() { return {0.0, 1e-6, 0.5, 1.0}; }

std::vector<Index> default_example4_dims() { return {10, 16, 20, 24}; }

std::vector<ExperimentStats> run_example1(const std::vector<double>& t_values) {
    return sweep(t_values.size(), [&](Index i) {
        const double t = t_values[i];
        return guarded_row(t_label(t), t, [&] { return example1_matrix(t); });
    });
}

std::vector<ExperimentStats> run_example2(const std::vector<double>& t_values,
                                          InverseRoute route) {
    return sweep(t_values.size(), [&](Index i) {
        const double t = t_values[i];
        return guarded_row(t_label(t), t, [&] {
            const Matrix a = example1_matrix(t);
            return route == InverseRoute::Lu ? symmetrize(inverse(a)) : symplectic_inverse(a);
        });
    });
}

std::vector<ExperimentStats> run_example3(Index n, double s, const std::vector<double>& t_values,
                                          std::uint64_t seed) {
    return sweep(t_values.size(), [&](Index i) {
        const double t = t_values[i];
        return guarded_row(t_label(t), t, [&] {
            RngStream rng(seed);
            return perturbed_symplectic(n, s, t, rng);
        });
    });
}

std::vector<ExperimentStats> run_example4(const std::vector<Index>& dims) {
    for (Index d : dims)
        if (d == 0 || d % 2 != 0)
            throw DomainError("run_example4: matrix orders must be positive and even");
    return sweep(dims.size(), [&](Index i) {
        const Index d = dims[i];
        return guarded_row(n_label(d), static_cast<double>(d), [&] {
            const Index n = d / 2;
            return lemma4_construct(beta_matrix(n), hilbert(n));
        });
    });
}

std::vector<ExperimentStats> run_example5(Index n_max, std::uint64_t seed) {
    if (n_max < 2 || n_max % 2 != 0)
        throw DomainError("run_example5: n_max must be even and at least 2");
    return sweep(n_max / 2, [&](Index i) {
        const Index n = 2 * (i + 1);
        return guarded_row(n_label(n), static_cast<double>(n), [&] {
            RngStream rng(derive_seed(seed, i));
            return random_spectrum_symplectic(n, rng);
        });
    });
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "markdown" || s == "md") return OutputFormat::Markdown;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw DomainError("unknown output format '" + s + "'");
}

void validate(const RunConfig& config) {
    if (config.id < 1 || config.id > 5)
        throw DomainError("experiment id must lie in 1..5, got " + std::to_string(config.id));
    if (config.id == 3 && (config.n == 0 || !(config.s >= 0.0)))
        throw DomainError("experiment 3 needs n >= 1 and s >= 0");
    if (config.id == 5 && (config.n_max < 2 || config.n_max % 2 != 0))
        throw DomainError("experiment 5 needs an even n-max >= 2");
}

std::vector<ExperimentStats> run_experiment(const RunConfig& config) {
    validate(config);
    switch (config.id) {
        case 1: return run_example1(config.t_values.empty() ? default_t_grid() : config.t_values);
        case 2:
            return run_example2(config.t_values.empty() ? default_t_grid() : config.t_values,
                                config.inverse_route);
        case 3:
            return run_example3(config.n, config.s,
                                config.t_values.empty() ? default_example3_t_grid()
                                                        : config.t_values,
                                config.seed);
        case 4: return run_example4(config.dims.empty() ? default_example4_dims() : config.dims);
        default: return run_example5(config.n_max, config.seed);
    }
}

}  // namespace symplt
