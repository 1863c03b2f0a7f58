#include "symplt/rng.h"

#include <array>
#include <cmath>
#include <numbers>

namespace symplt {

double RngStream::uniform() {
    // (k + 0.5) / 2^53 for k in [0, 2^53) never hits 0 or 1.
    const std::uint64_t k = engine_() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
    if (cached_normal_) {
        const double z = *cached_normal_;
        cached_normal_.reset();
        return z;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(theta);
    return r * std::cos(theta);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace symplt
