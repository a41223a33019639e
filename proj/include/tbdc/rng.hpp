#pragma once

#include <cstdint>

namespace tbdc {

// SplitMix64 finalizer. Bijective on 64-bit words, full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// Independent sub-seed for a derived context (e.g. one sweep row).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed + kGoldenGamma * (index + 1));
}

// Counter-based random stream keyed by (seed, stream). Draw i is
// mix64(key + i*gamma), a pure function of the key and the draw index,
// so streams can be created per trial and consumed in any execution
// order (or thread) with identical results.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix64(mix64(seed) + kGoldenGamma * stream)) {}

    std::uint64_t next_u64() noexcept {
        counter_ += kGoldenGamma;
        return mix64(key_ + counter_);
    }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // always consumes exactly one draw, so frame layouts stay reproducible
    bool bernoulli(double p) noexcept { return uniform() < p; }

    // uniform integer in [0, n), n >= 1
    std::uint32_t below(std::uint32_t n) noexcept {
        const auto wide = static_cast<unsigned __int128>(next_u64());
        return static_cast<std::uint32_t>((wide * n) >> 64);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace tbdc
