#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hyperdom::rng {

// All randomized code in the project draws from mt19937_64 through these
// helpers instead of std::*_distribution, whose output is implementation
// defined. Keeps seeded runs identical across standard libraries.
inline std::uint64_t below(std::mt19937_64& gen, std::uint64_t bound) {
    // rejection sampling on the top of the range
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v;
    do {
        v = gen();
    } while (v >= limit);
    return v % bound;
}

// uniform in [0,1) with 53 random bits
inline double unit(std::mt19937_64& gen) {
    return double(gen() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& gen) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = std::size_t(below(gen, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace hyperdom::rng
