#pragma once

#include <array>
#include <cstdint>

namespace waveatom::rng {

// Philox 4x32, 10 rounds (Salmon et al., SC 2011). Counter-based: the
// value at any (counter, key) is computable without sequential state,
// which is what makes per-atom random streams independent of thread
// scheduling.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;

    auto round = [](std::array<std::uint32_t, 4>& x, const std::array<std::uint32_t, 2>& k) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * x[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * x[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    };

    for (int i = 0; i < 9; ++i) {
        round(ctr, key);
        key[0] += kW0;
        key[1] += kW1;
    }
    round(ctr, key);
    return ctr;
}

/// One logical random stream, keyed by (seed, stream). Draws are indexed;
/// the same (seed, stream, draw) always yields the same value.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    /// 64 uniform bits at the given draw index.
    std::uint64_t bits(std::uint64_t draw) const {
        const auto out = philox4x32(
            {static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32),
             static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
            {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    }

    /// Uniform double strictly inside (0, 1).
    double uniform(std::uint64_t draw) const {
        return (static_cast<double>(bits(draw) >> 11) + 0.5) * 0x1p-53;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

/// Stable sub-seed for realization r of a master seed (used when an
/// experiment averages several independent runs).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    const auto out = philox4x32(
        {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
         0x5eedf01du, 0x9e3779b9u},
        {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

} // namespace waveatom::rng
