#pragma once

// Deterministic RNG for sampling. splitmix64 is used instead of the
// standard distributions because byte-identical output across platforms
// is part of the claims-suite contract (std::uniform_real_distribution
// is not portable).

#include <cstdint>

namespace metjet {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in the open interval (0, 1)
    double unit_open() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit_open(); }

    int coin_sign() { return (next() & 1u) ? 1 : -1; }
};

// Stable substream derivation: hash the (seed, tag) pair through one
// splitmix step so streams for different tags are unrelated.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 m(seed ^ (tag * 0xd1342543de82ef95ULL + 0x63652362eafeuLL));
    return m.next();
}

}  // namespace metjet
