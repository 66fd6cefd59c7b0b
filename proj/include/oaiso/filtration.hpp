#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "design.hpp"
#include "rational.hpp"

namespace oaiso {

/// Raised when a would-be moment vector fails the invariants that make
/// 1 - mu a filtration (the input was not derived from a pmf).
struct filtration_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sublevel filtration of 1 - mu on the (d-1)-simplex whose faces are the
/// nonzero masks alpha in {0,1}^d. values[alpha] = 1 - mu_alpha; entry 0 is
/// unused (the all-zeros alpha is the empty simplex and is excluded).
struct Filtration {
    int d = 0;
    std::vector<Rational> values;
};

inline Filtration build_filtration(const MomentVector& m) {
    check_factor_count(m.d);
    const std::uint32_t n = cell_count(m.d);
    if (m.mu.size() != n) throw filtration_error("build_filtration: expected 2^d moments");
    if (m.mu[0] != Rational(1)) throw filtration_error("build_filtration: mu at all-zeros must be 1");

    Filtration filt;
    filt.d = m.d;
    filt.values.resize(n);
    for (std::uint32_t a = 1; a < n; ++a) {
        if (m.mu[a] < Rational(0) || m.mu[a] > Rational(1))
            throw filtration_error("build_filtration: moment out of [0, 1]");
        filt.values[a] = Rational(1) - m.mu[a];
    }
    // Monotone under face inclusion: checking each facet (one bit removed)
    // covers the whole face poset.
    for (std::uint32_t a = 1; a < n; ++a) {
        for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
            const std::uint32_t face = a ^ (rest & (0u - rest));
            if (face == 0) continue;
            if (filt.values[face] > filt.values[a])
                throw filtration_error("build_filtration: 1 - mu is not monotone under face inclusion");
        }
    }
    return filt;
}

/// The multiset of filtration values, sorted; the cheap pre-screen the
/// randomized isomorphism test applies before computing a diagram.
inline std::vector<Rational> filtration_values_sorted(const Filtration& filt) {
    std::vector<Rational> vals(filt.values.begin() + 1, filt.values.end());
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace oaiso
