#pragma once

#include <cstdint>
#include <string_view>

namespace talentrec {

// Deterministic 64-bit generator (splitmix64 permutation). Used everywhere a
// random draw occurs so that results are bit-identical across platforms and
// standard-library versions; std::uniform_int_distribution makes no such
// guarantee.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// FNV-1a 64-bit hash of a byte string.
std::uint64_t hash64(std::string_view s);

// Seed for a named substream: combines a run seed with a string key (e.g. a
// user id) so each entity gets an independent, reproducible stream.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view key);

}  // namespace talentrec
