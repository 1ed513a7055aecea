#include "talentrec/rng.hpp"

namespace talentrec {

std::uint64_t hash64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view key) {
    // Run the combined value through one splitmix step so adjacent seeds do
    // not produce correlated streams.
    SplitMix64 g(seed ^ hash64(key));
    return g.next();
}

}  // namespace talentrec
