// Serial vs OpenMP kernels. Prints one CSV line per (kernel, size) with the
// best-of-reps wall time of each version and whether the outputs agree bit
// for bit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "symplt/kernels.h"
#include "symplt/rng.h"

using namespace symplt;

namespace {

Matrix random_matrix(Index n, std::uint64_t seed) {
    RngStream rng(seed);
    Matrix m(n, n);
    for (double& x : m.data()) x = rng.normal();
    return m;
}

double best_ms(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* kernel, Index n, double serial, double parallel, bool same) {
    std::printf("%s,%zu,%d,%.4f,%.4f,%.2f,%s\n", kernel, n, omp_get_max_threads(), serial, parallel,
                serial / parallel, same ? "yes" : "no");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel dense kernels"};
    std::vector<Index> sizes{64, 128, 256, 500, 1000};
    int reps = 5;
    app.add_option("--sizes", sizes, "Matrix orders")->capture_default_str();
    app.add_option("--reps", reps, "Repetitions; the fastest is reported")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::printf("kernel,n,threads,serial_ms,parallel_ms,speedup,identical\n");
    for (Index n : sizes) {
        const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
        Matrix c1(n, n), c2(n, n);
        const double ts = best_ms(reps, [&] { kernels::serial::matmul(a, b, c1); });
        const double tp = best_ms(reps, [&] { kernels::parallel::matmul(a, b, c2); });
        report("matmul", n, ts, tp, c1 == c2);

        std::vector<double> x(n, 1.0), y1(n), y2(n);
        for (Index i = 0; i < n; ++i) x[i] = 1.0 / double(i + 1);
        const int inner = 50;
        const double vs = best_ms(reps, [&] {
            for (int k = 0; k < inner; ++k) kernels::serial::matvec(a, x, y1);
        });
        const double vp = best_ms(reps, [&] {
            for (int k = 0; k < inner; ++k) kernels::parallel::matvec(a, x, y2);
        });
        report("matvec", n, vs / inner, vp / inner, y1 == y2);

        const double ws = best_ms(reps, [&] {
            for (int k = 0; k < inner; ++k) kernels::serial::matvec_transposed(a, x, y1);
        });
        const double wp = best_ms(reps, [&] {
            for (int k = 0; k < inner; ++k) kernels::parallel::matvec_transposed(a, x, y2);
        });
        report("matvec_transposed", n, ws / inner, wp / inner, y1 == y2);
    }
    return 0;
}
