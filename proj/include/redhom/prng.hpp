#ifndef REDHOM_PRNG_HPP
#define REDHOM_PRNG_HPP

#include <cstdint>
#include <initializer_list>

namespace redhom {

// SplitMix64. Used everywhere randomness is needed so that runs are
// reproducible across platforms and standard-library versions
// (std::uniform_int_distribution is implementation-defined).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Counter-based key derivation: every component that needs its own
    // stream mixes the run seed with fixed labels/counters, so trial i is
    // reproducible in isolation.
    static std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
        std::uint64_t h = 0x243F6A8885A308D3ull;  // arbitrary nonzero start
        for (std::uint64_t p : parts) {
            h ^= p + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xFF51AFD7ED558CCDull;
            h ^= h >> 33;
        }
        return h;
    }

private:
    std::uint64_t state_;
};

}  // namespace redhom

#endif
