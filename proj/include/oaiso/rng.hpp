#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace oaiso {

using Rng = std::mt19937_64;

/// Uniform draw from {0, ..., n-1}. Rejection sampled from the raw 64-bit
/// stream so results do not depend on the standard library's distribution
/// implementation and are reproducible across platforms.
inline std::uint64_t next_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    if ((n & (n - 1)) == 0) return rng() & (n - 1);
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
    const std::uint64_t limit = max - rem;        // accept x <= limit
    std::uint64_t x = rng();
    while (x > limit) x = rng();
    return x % n;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Splitting rule for independent worker streams: worker k gets
/// splitmix64(master + k). Experiment pairs use their pair index as k, so
/// per-pair results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return splitmix64(master + k);
}

}  // namespace oaiso
