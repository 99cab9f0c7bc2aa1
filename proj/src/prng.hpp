#pragma once

#include <cstdint>

namespace hb {

// splitmix64: the fixed generator behind every seeded feature (sampled
// sweeps, explore). Reports name it so independent implementations can
// reproduce runs bit for bit.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; rejection sampling keeps it unbiased
    uint64_t next_below(uint64_t bound) {
        uint64_t mask = ~uint64_t{0};
        if (bound == 0) return 0;
        uint64_t limit = mask - mask % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }
};

inline constexpr const char* kRngName = "splitmix64";

}  // namespace hb
