#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "design.hpp"
#include "rng.hpp"

namespace oaiso {

/// An element of the isomorphism group acting on designs: a factor
/// relabeling followed by per-factor level switches. Run reordering is not
/// represented; counting vectors are already run-order invariant, so the
/// effective group is relabelings x flips, of order d! * 2^d.
///
/// Action on a run x: y_i = x_{sigma[i]} XOR flip_i, with sigma 0-based and
/// flips in the same most-significant-bit-first mask layout as runs.
struct IsoTransform {
    std::vector<int> sigma;
    std::uint32_t flips = 0;
};

inline void validate(const IsoTransform& g, int d) {
    if (static_cast<int>(g.sigma.size()) != d)
        throw std::invalid_argument("IsoTransform: sigma size does not match d");
    std::vector<bool> seen(d, false);
    for (int s : g.sigma) {
        if (s < 0 || s >= d || seen[s])
            throw std::invalid_argument("IsoTransform: sigma is not a permutation of {0..d-1}");
        seen[s] = true;
    }
    if (d < 32 && g.flips >= cell_count(d))
        throw std::invalid_argument("IsoTransform: flips mask out of range for d");
}

inline IsoTransform identity_transform(int d) {
    IsoTransform g;
    g.sigma.resize(d);
    std::iota(g.sigma.begin(), g.sigma.end(), 0);
    return g;
}

inline bool is_identity(const IsoTransform& g) {
    if (g.flips != 0) return false;
    for (int i = 0; i < static_cast<int>(g.sigma.size()); ++i)
        if (g.sigma[i] != i) return false;
    return true;
}

inline std::uint32_t transform_point(std::uint32_t mask, const IsoTransform& g, int d) {
    std::uint32_t y = 0;
    for (int i = 0; i < d; ++i) {
        const std::uint32_t bit = (mask >> (d - 1 - g.sigma[i])) & 1u;
        y |= bit << (d - 1 - i);
    }
    return y ^ g.flips;
}

/// The transform as a permutation of cell indices: entry i is the image of
/// cell i, so a counting vector maps as out[map[i]] = in[i].
inline std::vector<std::uint32_t> index_map(const IsoTransform& g, int d) {
    validate(g, d);
    const std::uint32_t n = cell_count(d);
    std::vector<std::uint32_t> map(n);
    for (std::uint32_t i = 0; i < n; ++i) map[i] = transform_point(i, g, d);
    return map;
}

inline Fraction apply_transform(const Fraction& f, const IsoTransform& g) {
    validate(f);
    validate(g, f.d);
    Fraction out;
    out.d = f.d;
    out.runs.reserve(f.runs.size());
    for (std::uint32_t r : f.runs) out.runs.push_back(transform_point(r, g, f.d));
    return out;
}

inline CountingVector apply_transform(const CountingVector& v, const IsoTransform& g) {
    validate(v);
    const std::vector<std::uint32_t> map = index_map(g, v.d);
    CountingVector out;
    out.d = v.d;
    out.counts.assign(v.counts.size(), 0);
    for (std::uint32_t i = 0; i < v.counts.size(); ++i) out.counts[map[i]] = v.counts[i];
    return out;
}

/// Inverse element: if y_i = x_{sigma[i]} ^ flip_i then
/// x_j = y_{sigma^-1(j)} ^ flip_{sigma^-1(j)}.
inline IsoTransform inverse(const IsoTransform& g) {
    const int d = static_cast<int>(g.sigma.size());
    validate(g, d);
    IsoTransform inv;
    inv.sigma.resize(d);
    for (int i = 0; i < d; ++i) inv.sigma[g.sigma[i]] = i;
    for (int j = 0; j < d; ++j) {
        const int src = inv.sigma[j];  // = sigma^-1(j)
        const std::uint32_t bit = (g.flips >> (d - 1 - src)) & 1u;
        inv.flips |= bit << (d - 1 - j);
    }
    return inv;
}

/// Composition acting as "h first, then g": apply(compose(g,h), x) ==
/// apply(g, apply(h, x)).
inline IsoTransform compose(const IsoTransform& g, const IsoTransform& h) {
    const int d = static_cast<int>(g.sigma.size());
    validate(g, d);
    validate(h, d);
    IsoTransform c;
    c.sigma.resize(d);
    for (int i = 0; i < d; ++i) c.sigma[i] = h.sigma[g.sigma[i]];
    for (int i = 0; i < d; ++i) {
        const std::uint32_t hb = (h.flips >> (d - 1 - g.sigma[i])) & 1u;
        const std::uint32_t gb = (g.flips >> (d - 1 - i)) & 1u;
        c.flips |= (hb ^ gb) << (d - 1 - i);
    }
    return c;
}

/// All d! * 2^d group elements, in (sigma lexicographic, flips ascending)
/// order.
inline std::vector<IsoTransform> all_transforms(int d) {
    check_factor_count(d);
    std::vector<IsoTransform> out;
    IsoTransform g = identity_transform(d);
    const std::uint32_t nflips = cell_count(d);
    do {
        for (g.flips = 0; g.flips < nflips; ++g.flips) out.push_back(g);
    } while (std::next_permutation(g.sigma.begin(), g.sigma.end()));
    return out;
}

/// Uniform draw over the d! * 2^d group; deterministic given the rng state.
inline IsoTransform random_transform(Rng& rng, int d) {
    check_factor_count(d);
    IsoTransform g = identity_transform(d);
    for (int i = d - 1; i > 0; --i) {
        const int j = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(g.sigma[i], g.sigma[j]);
    }
    g.flips = static_cast<std::uint32_t>(next_below(rng, cell_count(d)));
    return g;
}

inline bool operator==(const IsoTransform& a, const IsoTransform& b) {
    return a.sigma == b.sigma && a.flips == b.flips;
}

}  // namespace oaiso
