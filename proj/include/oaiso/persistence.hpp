#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "filtration.hpp"
#include "rational.hpp"

namespace oaiso {

struct DiagramPoint {
    Rational birth;
    Rational death;

    friend bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
        return a.birth == b.birth && a.death == b.death;
    }
    friend bool operator<(const DiagramPoint& a, const DiagramPoint& b) {
        return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
    }
};

/// Persistence diagram of a design-induced filtration. Finite points and
/// essential (infinite-death) births are kept separately, per homology
/// dimension 0 .. d-1, each sorted. Pairs with birth == death carry no
/// topological information and are dropped; their count is retained for
/// bookkeeping.
struct PersistenceDiagram {
    int d = 0;
    std::vector<std::vector<DiagramPoint>> finite;
    std::vector<std::vector<Rational>> essential;
    std::size_t zero_persistence_dropped = 0;

    std::size_t finite_count() const {
        std::size_t n = 0;
        for (const auto& pts : finite) n += pts.size();
        return n;
    }
    std::size_t essential_count() const {
        std::size_t n = 0;
        for (const auto& b : essential) n += b.size();
        return n;
    }
};

/// Persistent homology of the sublevel filtration, coefficients in GF(2),
/// by standard boundary-matrix reduction. Simplices are ordered by
/// (filtration value, dimension, mask); ties broken this way always place a
/// face before its cofaces and make the result deterministic.
inline PersistenceDiagram persistence(const Filtration& filt) {
    const int d = filt.d;
    const std::uint32_t n = cell_count(d);

    std::vector<std::uint32_t> order;
    order.reserve(n - 1);
    for (std::uint32_t a = 1; a < n; ++a) order.push_back(a);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (filt.values[a] != filt.values[b]) return filt.values[a] < filt.values[b];
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    std::vector<std::uint32_t> pos(n, 0);
    for (std::uint32_t j = 0; j < order.size(); ++j) pos[order[j]] = j;

    PersistenceDiagram dgm;
    dgm.d = d;
    dgm.finite.resize(d);
    dgm.essential.resize(d);

    const std::uint32_t none = ~0u;
    std::vector<std::uint32_t> pivot_owner(order.size(), none);  // row -> column that ends there
    std::vector<std::vector<std::uint32_t>> cols(order.size());  // reduced columns, rows ascending
    std::vector<bool> creator(order.size(), false);
    std::vector<bool> killed(order.size(), false);

    std::vector<std::uint32_t> col, merged;
    for (std::uint32_t j = 0; j < order.size(); ++j) {
        const std::uint32_t mask = order[j];
        col.clear();
        if (std::popcount(mask) >= 2) {
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
                col.push_back(pos[mask ^ (rest & (0u - rest))]);
            std::sort(col.begin(), col.end());
        }
        while (!col.empty() && pivot_owner[col.back()] != none) {
            const auto& other = cols[pivot_owner[col.back()]];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(merged));
            col.swap(merged);
        }
        if (col.empty()) {
            creator[j] = true;
            continue;
        }
        const std::uint32_t i = col.back();
        pivot_owner[i] = j;
        cols[j] = col;
        killed[i] = true;
        const Rational birth = filt.values[order[i]];
        const Rational death = filt.values[mask];
        const int dim = std::popcount(order[i]) - 1;
        if (birth == death)
            ++dgm.zero_persistence_dropped;
        else
            dgm.finite[dim].push_back({birth, death});
    }

    for (std::uint32_t j = 0; j < order.size(); ++j)
        if (creator[j] && !killed[j])
            dgm.essential[std::popcount(order[j]) - 1].push_back(filt.values[order[j]]);

    for (auto& pts : dgm.finite) std::sort(pts.begin(), pts.end());
    for (auto& births : dgm.essential) std::sort(births.begin(), births.end());
    return dgm;
}

}  // namespace oaiso
