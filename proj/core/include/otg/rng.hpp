#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace otg {

// SplitMix64 finalizer. All randomness in the project is built from this
// mixer so that a run is reproducible from its master seed alone; the exact
// bit-level recipe is documented in the README so other implementations can
// replay the same streams.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// Per-stage seed: derive_seed(master, "split", 0), derive_seed(master, "tree", i), ...
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                    std::uint64_t index = 0) {
    return mix64(mix64(master ^ fnv1a64(label)) ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

// Deterministic uniform stream (SplitMix64).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53 mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n); n must be >= 1.
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Box-Muller, two uniforms per draw (no caching: keeps the stream layout
    // trivial to describe).
    double next_normal();

    // Fisher-Yates, descending index.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // First k entries of a partial Fisher-Yates over 0..n-1.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::uint64_t state_;
};

}  // namespace otg
