#include "cli.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symplt/experiments.h"
#include "symplt/factor.h"
#include "symplt/generators.h"
#include "symplt/matrix_io.h"
#include "symplt/symplectic.h"

namespace symplt::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotSymplectic = 1;
constexpr int kExitError = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string params_text(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    return read_file(arg);
}

std::string sci(double x) {
    if (!std::isfinite(x)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", x);
    return buf;
}

int cmd_factor(const fs::path& input, const std::string& algorithm, const fs::path& report,
               fs::path stem, std::ostream& out) {
    const Matrix a = read_matrix_csv(input);
    const FactorizationOutput result = factorize(a, parse_algorithm(algorithm));

    if (stem.empty()) stem = input.parent_path() / input.stem();
    const auto base = stem.string();
    write_matrix_csv(fs::path(base + ".l11.csv"), result.factor.l11.matrix());
    write_matrix_csv(fs::path(base + ".l21.csv"), result.factor.l21);
    write_matrix_csv(fs::path(base + ".l22.csv"), result.factor.l22.matrix());

    const Index n = result.factor.n();
    const double norm_l = two_norm(result.factor.assemble()).value;
    nlohmann::ordered_json j;
    j["dec"] = result.dec;
    j["delta_l"] = result.residual.delta_l;
    j["symp_l"] = result.residual.delta_l / (norm_l * norm_l);
    j["f11_norm"] = result.residual.f11_norm;
    j["f12_norm"] = result.residual.f12_norm;
    j["kappa_a"] = condition_number(a);
    j["kappa_a11"] = condition_number(a.block(0, 0, n, n));
    const std::string text = j.dump(2) + "\n";
    if (report.empty()) {
        out << text;
    } else {
        std::ofstream f(report, std::ios::binary);
        if (!f) throw Error("cannot write " + report.string());
        f << text;
    }
    return kExitOk;
}

int cmd_check(const fs::path& input, std::ostream& out) {
    const Matrix a = read_matrix_csv(input);
    const SymplecticDefect d = symplecticity_defect(a);
    double kappa = std::numeric_limits<double>::infinity();
    try {
        kappa = condition_number(a);
    } catch (const SingularError&) {
    }
    const bool symplectic = d.symp_rel <= kDefaultTol;
    out << "Delta(A)   " << sci(d.delta) << '\n'
        << "sympA      " << sci(d.symp_rel) << '\n'
        << "||A||_2    " << sci(d.norm_x) << '\n'
        << "kappa_2(A) " << sci(kappa) << '\n'
        << "symplectic " << (symplectic ? "yes" : "no") << " (sympA <= " << sci(kDefaultTol)
        << ")\n";
    return symplectic ? kExitOk : kExitNotSymplectic;
}

int cmd_gen(const std::string& family, const std::string& params, const fs::path& dest) {
    GeneratorSpec fallback;
    fallback.family = parse_family(family);
    GeneratorSpec spec =
        params.empty() ? fallback : parse_generator_spec(params_text(params), fallback);
    spec.family = fallback.family;
    write_matrix_csv(dest, generate(spec));
    return kExitOk;
}

int cmd_experiment(RunConfig config, const std::string& format, const std::string& inverse,
                   std::ostream& out) {
    config.format = parse_output_format(format);
    if (inverse == "lu")
        config.inverse_route = InverseRoute::Lu;
    else if (inverse == "symplectic")
        config.inverse_route = InverseRoute::Symplectic;
    else
        throw DomainError("unknown inverse route '" + inverse + "'");

    const auto start = std::chrono::steady_clock::now();
    const auto rows = run_and_write(config);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.ok() ? 0 : 1;
    out << "experiment " << config.id << ": " << rows.size() << " rows (" << failed
        << " failed) in " << sci(seconds) << " s -> " << config.out.string() << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symplectic LL^T factorization of SPD symplectic matrices"};
    app.require_subcommand(1);

    std::string input, algorithm = "w2", report, stem;
    auto* factor = app.add_subcommand("factor", "Factor an SPD matrix read from CSV");
    factor->add_option("--input", input, "Matrix CSV")->required();
    factor->add_option("--algorithm", algorithm, "w1 or w2")
        ->check(CLI::IsMember({"w1", "w2"}))
        ->capture_default_str();
    factor->add_option("--report", report, "Write the JSON report here instead of stdout");
    factor->add_option("--out-stem", stem,
                       "Prefix for <stem>.l11.csv, .l21.csv, .l22.csv (default: input path "
                       "without extension)");

    std::string check_input;
    auto* check = app.add_subcommand("check", "Measure the loss of symplecticity of a matrix");
    check->add_option("--input", check_input, "Matrix CSV")->required();

    std::string family, params, gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a test matrix");
    gen->add_option("--family", family, "s_of_t | gener_symp2 | lemma4 | spectrum | perturbed")
        ->required()
        ->check(CLI::IsMember({"s_of_t", "gener_symp2", "lemma4", "spectrum", "perturbed"}));
    gen->add_option("--params", params,
                    "JSON descriptor {\"n\":5,\"s\":3,\"t\":0,\"seed\":0} inline or as a file path");
    gen->add_option("--out", gen_out, "Output CSV")->required();

    RunConfig config;
    std::string format = "markdown", inverse = "lu", exp_out;
    auto* experiment = app.add_subcommand("experiment", "Reproduce one of the numerical examples");
    experiment->add_option("--id", config.id, "Experiment 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    experiment->add_option("--seed", config.seed, "Master seed (experiments 3 and 5)")
        ->capture_default_str();
    experiment->add_option("--n-max", config.n_max, "Largest n for experiment 5 (even)")
        ->capture_default_str();
    experiment->add_option("--format", format, "markdown | csv | json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();
    experiment->add_option("--inverse", inverse, "Experiment 2 inverse: lu | symplectic")
        ->check(CLI::IsMember({"lu", "symplectic"}))
        ->capture_default_str();
    experiment->add_option("--out", exp_out, "Output table path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (factor->parsed()) return cmd_factor(input, algorithm, report, stem, out);
        if (check->parsed()) return cmd_check(check_input, out);
        if (gen->parsed()) return cmd_gen(family, params, gen_out);
        config.out = exp_out;
        return cmd_experiment(config, format, inverse, out);
    } catch (const Error& e) {
        err << "symplt: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace symplt::cli
