#ifndef ABST_RNG_HPP
#define ABST_RNG_HPP

#include <cstdint>

namespace abst {

// SplitMix64 (Vigna's fixed-increment SplittableRandom). One 64-bit output
// per call; the whole stream is a pure function of the seed, so instances
// regenerate bit-identically on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw in [0, bound) by rejection: redraw while the raw value
    // falls in the tail of size 2^64 mod bound.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t rem = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (rem == 0 || r < (0 - rem)) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace abst

#endif
