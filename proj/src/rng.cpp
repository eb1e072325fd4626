#include "rng.hpp"

#include <cmath>

#include "error.hpp"

namespace scx {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

} // namespace

RngState RngState::substream(std::uint64_t seed, std::uint64_t stream) {
    // Two mixing rounds keep nearby (seed, stream) pairs uncorrelated.
    return RngState(mix64(seed + kGolden * (stream + 1)) ^ mix64(stream + kGolden));
}

std::uint64_t RngState::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RngState::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngState::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

std::uint64_t RngState::next_below(std::uint64_t bound) {
    if (bound == 0) throw invalid_argument("next_below: bound must be positive");
    // Lemire's multiply-shift; unbiased via rejection on the low word.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        std::uint64_t threshold = -bound % bound;
        while (lo < threshold) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double RngState::normal() {
    double u1 = next_double();
    double u2 = next_double();
    // Guard against log(0).
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace scx
