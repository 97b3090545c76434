#pragma once

#include <cstdint>
#include <random>

namespace sdpcolor {

struct Estimate {
    long successes = 0;
    long trials = 0;
    double p = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    double radius() const { return (hi - lo) / 2; }
};

// Wilson score interval, 95% by default.
Estimate wilson(long successes, long trials, double z = 1.959963984540054);

// Independent generator for sample stream `stream` under `master`.
std::mt19937_64 stream_rng(std::uint64_t master, std::uint64_t stream);

// Samples are grouped in fixed-size streams so results depend only on the
// master seed and the sample count.
inline constexpr long kStreamSize = 1024;

template <class F>
void for_each_sample(std::uint64_t master, long samples, F&& fn) {
    for (long s0 = 0, stream = 0; s0 < samples; s0 += kStreamSize, ++stream) {
        auto rng = stream_rng(master, static_cast<std::uint64_t>(stream));
        long end = s0 + kStreamSize < samples ? s0 + kStreamSize : samples;
        for (long s = s0; s < end; ++s) fn(rng, s);
    }
}

// Derive a child seed for a named sub-task.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag);

}  // namespace sdpcolor
