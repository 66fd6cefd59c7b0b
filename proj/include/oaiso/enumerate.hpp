#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "design.hpp"

namespace oaiso {
namespace detail {

/// Backtracking enumeration of all counting vectors v >= 0 with sum N whose
/// projections onto every subset of at most t factors are balanced, i.e. all
/// strength-t OAs on N runs (runs may repeat). Cells are assigned in
/// lexicographic index order, so the output comes out sorted and
/// duplicate-free.
///
/// Pruning uses the full contingency family: for every factor subset S with
/// 1 <= |S| <= t and every level pattern a on S, the cells projecting onto a
/// must sum to exactly N / 2^|S|.
inline std::vector<CountingVector> enumerate_counting_vectors(int d, std::int64_t N, int t) {
    check_factor_count(d);
    if (t < 1 || t > d) throw std::invalid_argument("enumerate: t must be in [1, d]");
    if (N < 1 || N % (std::int64_t{1} << t) != 0)
        throw std::invalid_argument("enumerate: 2^t must divide N");

    const std::uint32_t n = cell_count(d);

    struct Constraint {
        std::uint32_t factor_mask;
        std::uint32_t level_mask;
        std::int64_t need;  // remaining sum the open cells must provide
        std::uint32_t open; // unassigned cells in the support
    };
    std::vector<Constraint> cons;
    for (std::uint32_t s_mask = 1; s_mask < n; ++s_mask) {
        const int s = std::popcount(s_mask);
        if (s > t) continue;
        const std::int64_t target = N >> s;
        // level patterns = submasks of s_mask, including 0
        std::uint32_t a = s_mask;
        while (true) {
            cons.push_back({s_mask, a, target, n >> s});
            if (a == 0) break;
            a = (a - 1) & s_mask;
        }
    }

    std::vector<std::vector<std::uint32_t>> cell_cons(n);
    for (std::uint32_t ci = 0; ci < cons.size(); ++ci)
        for (std::uint32_t cell = 0; cell < n; ++cell)
            if ((cell & cons[ci].factor_mask) == cons[ci].level_mask)
                cell_cons[cell].push_back(ci);

    std::vector<std::int64_t> v(n, 0);
    std::vector<CountingVector> out;

    auto rec = [&](auto&& self, std::uint32_t cell, std::int64_t rem) -> void {
        if (cell == n) {
            out.push_back(CountingVector{d, v});
            return;
        }
        std::int64_t ub = rem;
        for (std::uint32_t ci : cell_cons[cell]) ub = std::min(ub, cons[ci].need);

        for (std::uint32_t ci : cell_cons[cell]) --cons[ci].open;
        for (std::int64_t val = 0; val <= ub; ++val) {
            v[cell] = val;
            for (std::uint32_t ci : cell_cons[cell]) cons[ci].need -= val;
            bool ok = true;
            for (std::uint32_t ci : cell_cons[cell]) {
                const auto& c = cons[ci];
                if (c.open == 0 ? c.need != 0 : c.need > rem - val) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, cell + 1, rem - val);
            for (std::uint32_t ci : cell_cons[cell]) cons[ci].need += val;
        }
        v[cell] = 0;
        for (std::uint32_t ci : cell_cons[cell]) ++cons[ci].open;
    };
    rec(rec, 0, N);
    return out;
}

}  // namespace detail

/// Desk-scale enumeration envelope; larger parameter sets must be ingested
/// from files rather than generated here.
inline bool enumeration_supported(int d, std::int64_t N, int t) {
    return d >= 1 && d <= 4 && N >= 1 && N <= 20 && t >= 1 && t <= d &&
           N % (std::int64_t{1} << t) == 0;
}

/// All strength-t OAs with d factors and N runs, as counting vectors in
/// lexicographic order. Complete and duplicate-free.
inline std::vector<CountingVector> enumerate_oas(int d, std::int64_t N, int t) {
    if (!enumeration_supported(d, N, t))
        throw std::invalid_argument(
            "enumerate_oas: unsupported parameters (need d <= 4, N <= 20, 1 <= t <= d, 2^t | N)");
    return detail::enumerate_counting_vectors(d, N, t);
}

}  // namespace oaiso
