#pragma once

#include <cstdint>

namespace bgbench::rng {

// Counter-based generation: every draw is a pure function of (seed, counter),
// so items can be produced in any order, on any thread, with identical results.

// SplitMix64 output stage (Steele/Lea/Flood finalizer).
inline uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Draw for position `counter` in the stream keyed by `seed`.
inline uint64_t at(uint64_t seed, uint64_t counter) {
    return mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

// Two-level key, e.g. (epoch, item) or (domain, item).
inline uint64_t at2(uint64_t seed, uint64_t a, uint64_t b) {
    return at(at(seed, a), b);
}

inline uint64_t at3(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
    return at(at2(seed, a, b), c);
}

// Uniform real in [0, 1) from the top 53 bits.
inline double to_unit_real(uint64_t bits) {
    return static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
}

// Stream keys used across the toolkit so independent consumers of the same
// user seed never collide.
enum Domain : uint64_t {
    kDomainCorruptionPlan = 0x01,
    kDomainTrainBackground = 0x02,
    kDomainValBackground = 0x03,
    kDomainTextureParams = 0x04,
    kDomainTextureChoice = 0x05,
    kDomainGlyphJitter = 0x06,
    kDomainTexturePhase = 0x07,
    kDomainPoolTexture = 0x08,
    kDomainInit = 0x09,
    kDomainBatchSampler = 0x0A,
    kDomainTest = 0xFF,
};

// Sequential convenience generator (SplitMix64 proper) for places where a
// local ordered stream is simpler than explicit counters.
class Stream {
public:
    explicit Stream(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    double next_real() { return to_unit_real(next_u64()); }

    // Uniform in [lo, hi).
    double next_range(double lo, double hi) { return lo + (hi - lo) * next_real(); }

    // Uniform integer in [0, n). n must be >= 1.
    uint64_t next_index(uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller.
    double next_gaussian();

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bgbench::rng
