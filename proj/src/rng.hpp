#pragma once

#include <cstdint>

namespace scx {

/// Counter-based splittable generator (splitmix64 core). The same seed
/// produces the same stream on every platform, and independent substreams
/// are derived by mixing a stream id into the seed.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : state_(seed) {}

    /// Derive an independent stream from (seed, stream id).
    static RngState substream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double next_double();

    double uniform(double lo, double hi);

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal via Box-Muller; consumes two uniforms per draw.
    double normal();

private:
    std::uint64_t state_;
};

} // namespace scx
