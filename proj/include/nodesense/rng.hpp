#pragma once

#include <cstdint>

namespace nodesense::rng {

/// SplitMix64 output finalizer: a bijective 64-bit mix. Also used to
/// derive per-stream sub-seeds (sub_seed below).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64, the project's pinned random number generator. The state
/// advances by a fixed odd increment and the output is a finalized copy
/// of it, so the sequence for a given seed is identical on every
/// platform and any element can be skipped to in O(1).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// Seed of sub-stream `stream` for a run seeded with `seed`.
/// Stream 0 coincides with the plain single-stream sequence.
constexpr std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return seed ^ mix64(stream);
}

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double u01(SplitMix64& gen) noexcept {
    return static_cast<double>(gen.next() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(SplitMix64& gen, double lo, double hi) noexcept {
    return lo + u01(gen) * (hi - lo);
}

}  // namespace nodesense::rng
