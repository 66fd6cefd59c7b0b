#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "design.hpp"
#include "transform.hpp"

namespace oaiso {

/// Lexicographically minimal image of v over the full d! * 2^d group. Two
/// designs are isomorphic iff their canonical forms coincide. Full orbit
/// enumeration; intended as a desk-scale exact oracle (d <= 5 or so).
inline CountingVector canonical_form(const CountingVector& v) {
    validate(v);
    const int d = v.d;
    const std::uint32_t n = cell_count(d);
    std::vector<int> sigma(d);
    std::iota(sigma.begin(), sigma.end(), 0);

    std::vector<std::uint32_t> pm(n);
    std::vector<std::int64_t> cand(n);
    std::vector<std::int64_t> best;
    do {
        // cell image under the pure relabeling; flips then act by XOR on
        // the image index, so the map need not be rebuilt per flips value
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t y = 0;
            for (int k = 0; k < d; ++k) y |= ((i >> (d - 1 - sigma[k])) & 1u) << (d - 1 - k);
            pm[i] = y;
        }
        for (std::uint32_t flips = 0; flips < n; ++flips) {
            for (std::uint32_t i = 0; i < n; ++i) cand[pm[i] ^ flips] = v.counts[i];
            if (best.empty() || cand < best) best = cand;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    return CountingVector{d, std::move(best)};
}

inline bool are_isomorphic_exact(const CountingVector& v1, const CountingVector& v2) {
    if (v1.d != v2.d)
        throw std::invalid_argument("are_isomorphic_exact: dimension mismatch");
    if (v1.total() != v2.total()) return false;
    return canonical_form(v1) == canonical_form(v2);
}

struct ClassReduction {
    std::vector<CountingVector> representatives;  // canonical forms, sorted lexicographically
    std::vector<std::size_t> class_sizes;         // aligned with representatives
};

/// One canonical representative per isomorphism class of the input list,
/// with the number of input arrays falling in each class.
inline ClassReduction reduce_to_classes(const std::vector<CountingVector>& arrays) {
    ClassReduction out;
    if (arrays.empty()) return out;
    const int d = arrays.front().d;
    std::map<std::vector<std::int64_t>, std::size_t> classes;
    for (const auto& v : arrays) {
        if (v.d != d) throw std::invalid_argument("reduce_to_classes: mixed dimensions");
        ++classes[canonical_form(v).counts];
    }
    for (auto& [rep, size] : classes) {
        out.representatives.push_back(CountingVector{d, rep});
        out.class_sizes.push_back(size);
    }
    return out;
}

}  // namespace oaiso
