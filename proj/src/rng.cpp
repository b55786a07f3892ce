#include "crmcast/rng.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace crmcast {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double RngStream::exponential(double mean) {
    assert(mean > 0.0);
    // u in [0, 1) keeps 1 - u in (0, 1]; log1p for precision near u = 0.
    return -mean * std::log1p(-uniform01());
}

std::uint64_t RngStream::uniform_int(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_int: bound must be positive");
    }
    if (bound == 1) {
        return 0;
    }
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
        const std::uint64_t v = engine_() & mask;
        if (v < bound) {
            return v;
        }
    }
}

} // namespace crmcast
