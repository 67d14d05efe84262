#pragma once

#include <cstdint>

namespace subdiv {

// Seed for every randomized generator. Identical seed + parameters must
// reproduce identical instances on every platform.
struct Seed {
    std::uint64_t value = 0;
};

// SplitMix64 stream. Chosen over std::mt19937 / std::uniform_* because the
// output sequence is pinned by the algorithm itself, not by a standard
// library implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound). bound must be >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // True with probability p (clamped to [0, 1]).
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
    }

private:
    std::uint64_t state_;
};

}  // namespace subdiv
