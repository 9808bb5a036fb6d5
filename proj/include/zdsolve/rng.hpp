#pragma once

#include <cstdint>

namespace zdsolve {

// SplitMix64. Seeded draws must be bit-identical across platforms and
// standard libraries, which std::uniform_int_distribution does not promise.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] by rejection; requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~0ULL - (~0ULL % span);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    // Uniform nonzero in [lo, hi]; requires the range to contain a nonzero.
    std::int64_t uniform_nonzero(std::int64_t lo, std::int64_t hi) {
        std::int64_t r;
        do {
            r = uniform(lo, hi);
        } while (r == 0);
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace zdsolve
