#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "filtration.hpp"
#include "rational.hpp"

namespace oaiso {
namespace detail {

/// Rank over GF(2) of a dense 0/1 matrix given as bit-packed rows.
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
    int rank = 0;
    for (int c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
        const std::size_t word = static_cast<std::size_t>(c) >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][word] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && (rows[r][word] & bit))
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Betti numbers of the subcomplex {alpha : value(alpha) <= s}, one entry
/// per homology dimension 0 .. d-1, computed from boundary-matrix ranks over
/// GF(2) with no pairing. Independent of persistence(); used to validate it.
inline std::vector<std::int64_t> betti_at(const Filtration& filt, const Rational& s) {
    const int d = filt.d;
    const std::uint32_t n = cell_count(d);

    // simplices present at level s, bucketed by dimension
    std::vector<std::vector<std::uint32_t>> simplices(d);
    std::vector<std::uint32_t> index_in_dim(n, 0);
    for (std::uint32_t a = 1; a < n; ++a) {
        if (filt.values[a] > s) continue;
        const int dim = std::popcount(a) - 1;
        index_in_dim[a] = static_cast<std::uint32_t>(simplices[dim].size());
        simplices[dim].push_back(a);
    }

    // rank of the boundary map from k-simplices to (k-1)-simplices
    std::vector<int> rank(d + 1, 0);
    for (int k = 1; k < d; ++k) {
        if (simplices[k].empty() || simplices[k - 1].empty()) continue;
        const int ncols = static_cast<int>(simplices[k - 1].size());
        const std::size_t words = (static_cast<std::size_t>(ncols) + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(simplices[k].size());
        for (std::uint32_t a : simplices[k]) {
            std::vector<std::uint64_t> row(words, 0);
            for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
                const std::uint32_t face = a ^ (rest & (0u - rest));
                const std::uint32_t c = index_in_dim[face];
                row[c >> 6] |= std::uint64_t{1} << (c & 63);
            }
            rows.push_back(std::move(row));
        }
        rank[k] = detail::gf2_rank(std::move(rows), ncols);
    }

    std::vector<std::int64_t> betti(d, 0);
    for (int k = 0; k < d; ++k)
        betti[k] = static_cast<std::int64_t>(simplices[k].size()) - rank[k] - rank[k + 1];
    return betti;
}

}  // namespace oaiso
