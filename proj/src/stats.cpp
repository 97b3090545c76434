#include "sdpcolor/stats.hpp"

#include <algorithm>
#include <cmath>

namespace sdpcolor {

Estimate wilson(long successes, long trials, double z) {
    Estimate e;
    e.successes = successes;
    e.trials = trials;
    if (trials <= 0) return e;
    const double n = static_cast<double>(trials);
    const double p = successes / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    e.p = p;
    e.lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    e.hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return e;
}

std::mt19937_64 stream_rng(std::uint64_t master, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace sdpcolor
