#pragma once

#include <cstdint>

namespace hilap {

// splitmix64 finalizer (Vigna). Statistically strong enough for the seeded
// Monte-Carlo harnesses here and fully deterministic across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Counter-based hashing of small tuples: hash(a,b) = mix(mix(a)+b), etc.
// Distinct tuples give independent-looking draws; no state is carried.
inline std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) + b);
}
inline std::uint64_t hash3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix64(hash2(a, b) + c);
}
inline std::uint64_t hash4(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return splitmix64(hash3(a, b, c) + d);
}

// Top 53 bits -> uniform double in [0, 1).
inline double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Small sequential generator for test/probe data (seeded, reproducible).
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    double next_unit() { return to_unit(next_u64()); }

    // Uniform in [lo, hi)
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

} // namespace hilap
