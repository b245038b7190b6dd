#pragma once

#include <cstdint>

namespace delsub {

// SplitMix64 (Steele, Lea, Flood). Output depends only on the seed, so
// sequences are identical on every platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform on [0, bound), bound > 0, by rejection
    constexpr std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // independent child stream
    constexpr SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace delsub
