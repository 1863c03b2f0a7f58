#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace symplt {

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; uniforms use the top 53 bits and
/// normals come from Box-Muller with the second value cached.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform in the open interval (0, 1).
    double uniform();
    /// Standard normal.
    double normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> cached_normal_;
};

/// Seed for row `index` of a sweep driven by `master`, independent of the
/// order in which rows are evaluated.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace symplt
