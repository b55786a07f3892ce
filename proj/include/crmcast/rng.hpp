#pragma once

#include <cstdint>
#include <random>

namespace crmcast {

// Derives an independent stream seed from (seed, stream) via a splitmix64-style
// finalizer. Used to give every trial, topology attempt, and traffic stream its
// own decorrelated engine seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random stream. All variates are inverted from 53-bit uniforms
// drawn off std::mt19937_64, which the standard pins bit-exactly; none of the
// implementation-defined std::*_distribution adapters are used. Identical seeds
// therefore produce identical sequences on every platform and thread count.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Exponential with the given mean, by inversion. mean > 0.
    double exponential(double mean);

    // True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer on [0, bound), bound >= 1, by bitmask rejection (exact).
    std::uint64_t uniform_int(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

} // namespace crmcast
