#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace oaiso {

// Counting vectors materialize all 2^d cells, so the factor count is capped.
inline constexpr int kMaxFactors = 20;

inline std::uint32_t cell_count(int d) { return std::uint32_t{1} << d; }

inline void check_factor_count(int d) {
    if (d < 1 || d > kMaxFactors)
        throw std::invalid_argument("factor count d must be in [1, " + std::to_string(kMaxFactors) +
                                    "], got " + std::to_string(d));
}

/// A design: an ordered list of runs over d binary factors. Each run is
/// stored as a d-bit mask with factor 1 in the most significant bit, so the
/// mask value equals the lexicographic index of the point in {0,1}^d
/// (all-zeros first).
struct Fraction {
    int d = 0;
    std::vector<std::uint32_t> runs;
};

/// Multiplicity of every point of {0,1}^d, indexed lexicographically.
struct CountingVector {
    int d = 0;
    std::vector<std::int64_t> counts;

    std::int64_t total() const {
        return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    }
};

struct Pmf {
    int d = 0;
    std::vector<Rational> probs;
};

/// mu[alpha] = E[X^alpha], the probability that all factors selected by
/// alpha equal 1. mu[0] is always 1.
struct MomentVector {
    int d = 0;
    std::vector<Rational> mu;
};

inline void validate(const Fraction& f) {
    check_factor_count(f.d);
    if (f.runs.empty()) throw std::invalid_argument("Fraction: needs at least one run");
    const std::uint32_t n = cell_count(f.d);
    for (std::uint32_t r : f.runs)
        if (r >= n) throw std::invalid_argument("Fraction: run mask out of range for d");
}

inline void validate(const CountingVector& v) {
    check_factor_count(v.d);
    if (v.counts.size() != cell_count(v.d))
        throw std::invalid_argument("CountingVector: expected 2^d entries");
    for (std::int64_t c : v.counts)
        if (c < 0) throw std::invalid_argument("CountingVector: negative count");
    if (v.total() == 0) throw std::invalid_argument("CountingVector: empty design (sum 0)");
}

/// Build a Fraction from rows of 0/1 entries (row = one run, entry i = level
/// of factor i+1).
inline Fraction make_fraction(int d, const std::vector<std::vector<int>>& rows) {
    check_factor_count(d);
    Fraction f;
    f.d = d;
    f.runs.reserve(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("make_fraction: row length does not match d");
        std::uint32_t mask = 0;
        for (int i = 0; i < d; ++i) {
            if (row[i] != 0 && row[i] != 1)
                throw std::invalid_argument("make_fraction: entries must be 0 or 1");
            mask |= static_cast<std::uint32_t>(row[i]) << (d - 1 - i);
        }
        f.runs.push_back(mask);
    }
    validate(f);
    return f;
}

/// Decode a run mask back to its 0/1 tuple.
inline std::vector<int> run_levels(std::uint32_t mask, int d) {
    std::vector<int> row(d);
    for (int i = 0; i < d; ++i) row[i] = static_cast<int>((mask >> (d - 1 - i)) & 1u);
    return row;
}

inline CountingVector counting_vector(const Fraction& f) {
    validate(f);
    CountingVector v;
    v.d = f.d;
    v.counts.assign(cell_count(f.d), 0);
    for (std::uint32_t r : f.runs) ++v.counts[r];
    return v;
}

/// Expand a counting vector to a Fraction with runs in lexicographic order.
inline Fraction to_fraction(const CountingVector& v) {
    validate(v);
    Fraction f;
    f.d = v.d;
    for (std::uint32_t cell = 0; cell < v.counts.size(); ++cell)
        for (std::int64_t k = 0; k < v.counts[cell]; ++k) f.runs.push_back(cell);
    return f;
}

inline Pmf pmf(const CountingVector& v) {
    validate(v);  // rejects the empty design
    const std::int64_t n = v.total();
    Pmf p;
    p.d = v.d;
    p.probs.reserve(v.counts.size());
    for (std::int64_t c : v.counts) p.probs.emplace_back(c, n);
    return p;
}

/// Moments via the superset-sum (zeta) transform:
/// mu[alpha] = sum of p[beta] over beta >= alpha componentwise.
inline MomentVector moments(const Pmf& p) {
    check_factor_count(p.d);
    if (p.probs.size() != cell_count(p.d))
        throw std::invalid_argument("moments: expected 2^d entries");
    MomentVector m;
    m.d = p.d;
    m.mu = p.probs;
    const std::uint32_t n = cell_count(p.d);
    for (std::uint32_t bit = 1; bit < n; bit <<= 1)
        for (std::uint32_t a = 0; a < n; ++a)
            if (!(a & bit)) m.mu[a] += m.mu[a | bit];
    return m;
}

/// Integer superset sums of a counting vector: entry alpha is N * mu_alpha.
inline std::vector<std::int64_t> superset_sums(const CountingVector& v) {
    validate(v);
    std::vector<std::int64_t> m = v.counts;
    const std::uint32_t n = cell_count(v.d);
    for (std::uint32_t bit = 1; bit < n; bit <<= 1)
        for (std::uint32_t a = 0; a < n; ++a)
            if (!(a & bit)) m[a] += m[a | bit];
    return m;
}

/// Strength-t orthogonal array test, in moment form: mu_alpha = 2^-|alpha|
/// exactly for all 1 <= |alpha| <= t. When 2^t does not divide N no OA can
/// exist and the answer is false (not an error).
inline bool check_strength(const CountingVector& v, int t) {
    validate(v);
    if (t < 1 || t > v.d)
        throw std::invalid_argument("check_strength: t must be in [1, d]");
    const std::int64_t n = v.total();
    if (n % (std::int64_t{1} << t) != 0) return false;
    const std::vector<std::int64_t> m = superset_sums(v);
    for (std::uint32_t a = 1; a < m.size(); ++a) {
        const int w = std::popcount(a);
        if (w <= t && m[a] != (n >> w)) return false;
    }
    return true;
}

/// Largest t with check_strength(v, t) true; 0 if the design is not even a
/// strength-1 OA.
inline int max_strength(const CountingVector& v) {
    int best = 0;
    for (int t = 1; t <= v.d; ++t) {
        if (!check_strength(v, t)) break;
        best = t;
    }
    return best;
}

inline bool operator==(const CountingVector& a, const CountingVector& b) {
    return a.d == b.d && a.counts == b.counts;
}

}  // namespace oaiso
