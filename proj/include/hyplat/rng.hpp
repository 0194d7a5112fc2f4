#pragma once

#include <cstdint>

namespace hyplat {

/// Small counter-derived PRNG stream (splitmix64 core). Streams for
/// different (seed, stream) pairs are independent for practical purposes,
/// and output is identical across platforms.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        // Mix the stream index into the seed so per-chain streams differ
        // even for adjacent seeds.
        state_ = mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
        state_ = mix(state_ ^ (stream * 0xbf58476d1ce4e5b9ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace hyplat
