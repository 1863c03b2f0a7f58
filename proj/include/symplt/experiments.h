#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "symplt/matrix.h"

namespace symplt {

/// One column of a results table: statistics of one test matrix under both
/// algorithms. Entries that could not be computed are NaN and `failure`
/// says why.
struct ExperimentStats {
    std::string label;
    double x = 0.0;  // sweep parameter: t or n
    std::string failure;

    double kappa_a = 0.0;
    double kappa_a11 = 0.0;
    double dec_w1 = 0.0;
    double dec_w2 = 0.0;
    double symp_a = 0.0;
    double symp_l_w1 = 0.0;
    double symp_l_w2 = 0.0;
    double delta_a = 0.0;
    double delta_l_w1 = 0.0;
    double delta_l_w2 = 0.0;
    double f11_norm = 0.0;
    double f12_w1 = 0.0;
    double f12_w2 = 0.0;

    bool ok() const noexcept { return failure.empty(); }
};

/// Name, table label and accessor of each statistic, in table order.
struct StatField {
    const char* key;
    const char* label;
    double ExperimentStats::*member;
};
const std::vector<StatField>& stat_fields();

/// Runs W1 and W2 on `a` and fills every statistic. Factorization failures
/// are recorded in the row, never thrown.
ExperimentStats compute_stats(std::string label, double x, const Matrix& a);

enum class InverseRoute { Lu, Symplectic };

std::vector<double> default_t_grid();
std::vector<double> default_example3_t_grid();
std::vector<Index> default_example4_dims();

/// A = S(t)^T S(t).
std::vector<ExperimentStats> run_example1(const std::vector<double>& t_values);
/// A = (S(t)^T S(t))^{-1}, by LU (then symmetrized) or by J^T A^T J.
std::vector<ExperimentStats> run_example2(const std::vector<double>& t_values,
                                          InverseRoute route = InverseRoute::Lu);
/// A = gener_symp2(n, s) + t hilbert(2n); the stream is reset to `seed` for
/// every t.
std::vector<ExperimentStats> run_example3(Index n, double s, const std::vector<double>& t_values,
                                          std::uint64_t seed);
/// A = lemma4_construct(beta_matrix(d/2), hilbert(d/2)) for each order d of A.
std::vector<ExperimentStats> run_example4(const std::vector<Index>& dims);
/// A = random_spectrum_symplectic(n) for n = 2, 4, ..., n_max; row k uses
/// derive_seed(seed, k).
std::vector<ExperimentStats> run_example5(Index n_max, std::uint64_t seed);

enum class OutputFormat { Markdown, Csv, Json };
OutputFormat parse_output_format(const std::string& s);

struct RunConfig {
    int id = 1;
    std::vector<double> t_values;  // empty: default for the experiment
    Index n = 5;
    double s = 3.0;
    std::vector<Index> dims;  // empty: default
    Index n_max = 250;
    std::uint64_t seed = 0;
    InverseRoute inverse_route = InverseRoute::Lu;
    OutputFormat format = OutputFormat::Markdown;
    std::filesystem::path out;
};

/// Throws DomainError for an unknown id or inconsistent parameters.
void validate(const RunConfig& config);
std::vector<ExperimentStats> run_experiment(const RunConfig& config);

/// Markdown: statistics as rows, one column per sweep value, 5 significant
/// digits. CSV and JSON: one record per sweep value, 17 significant digits.
std::string emit_table(const std::vector<ExperimentStats>& stats, OutputFormat format);
std::vector<ExperimentStats> parse_stats_csv(const std::string& text);

/// Figure panels as (name, csv) pairs; each csv has the sweep value in the
/// first column and one statistic per further column.
std::vector<std::pair<std::string, std::string>> figure_series(
    const std::vector<ExperimentStats>& stats);

/// Runs the experiment and writes the table (plus figure panels next to it
/// for experiment 5). Returns the rows.
std::vector<ExperimentStats> run_and_write(const RunConfig& config);

}  // namespace symplt
