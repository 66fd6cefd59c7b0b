#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "assignment.hpp"
#include "design.hpp"
#include "persistence.hpp"
#include "rational.hpp"

namespace oaiso {

/// How finite diagram points are matched by the order-1 Wasserstein
/// distance. DiagonalAugmented (the default) lets unmatched points pay their
/// orthogonal distance to the diagonal, so diagrams of different sizes stay
/// comparable. StrictBijection demands equal cardinality per dimension and
/// reports incomparable (+infinity) otherwise.
enum class MatchingMode { DiagonalAugmented, StrictBijection };

inline constexpr double kIncomparable = std::numeric_limits<double>::infinity();

/// Minimal l1 cost over permutations matching two pmfs. Sorting both vectors
/// and summing componentwise absolute differences is optimal for l1 on the
/// line, and keeps the result an exact rational. Zero iff the probability
/// multisets coincide.
inline Rational d1_wasserstein(const Pmf& p1, const Pmf& p2) {
    if (p1.probs.size() != p2.probs.size())
        throw std::invalid_argument("d1_wasserstein: length mismatch");
    std::vector<Rational> a = p1.probs, b = p2.probs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Rational total(0);
    for (std::size_t i = 0; i < a.size(); ++i) total += abs(a[i] - b[i]);
    return total;
}

/// Exhaustive minimum over all permutations; oracle for d1_wasserstein.
inline Rational d1_brute(const Pmf& p1, const Pmf& p2) {
    if (p1.probs.size() != p2.probs.size())
        throw std::invalid_argument("d1_brute: length mismatch");
    if (p1.probs.size() > 8)
        throw std::invalid_argument("d1_brute: length must be <= 8");
    std::vector<std::size_t> perm(p1.probs.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational best(-1);
    do {
        Rational total(0);
        for (std::size_t i = 0; i < perm.size(); ++i)
            total += abs(p1.probs[i] - p2.probs[perm[i]]);
        if (best < Rational(0) || total < best) best = total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace detail {

inline double point_dist(const DiagramPoint& a, const DiagramPoint& b) {
    return std::hypot(to_double(b.birth - a.birth), to_double(b.death - a.death));
}

/// Orthogonal distance from a finite point to the diagonal.
inline double diag_dist(const DiagramPoint& a) {
    return to_double(a.death - a.birth) / std::sqrt(2.0);
}

/// Order-1 matching cost between the finite points of one homology
/// dimension. The diagonal-augmented square matrix has no infinite entries:
/// row i < n1 is a point of A, later rows are diagonal stand-ins for B's
/// points, and symmetrically for columns, so every unmatched point pays its
/// own diagonal distance.
inline double finite_matching_cost(const std::vector<DiagramPoint>& A,
                                   const std::vector<DiagramPoint>& B, MatchingMode mode) {
    const std::size_t n1 = A.size(), n2 = B.size();
    if (mode == MatchingMode::StrictBijection) {
        if (n1 != n2) return kIncomparable;
        if (n1 == 0) return 0.0;
        std::vector<std::vector<double>> cost(n1, std::vector<double>(n1));
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) cost[i][j] = point_dist(A[i], B[j]);
        return solve_assignment(cost);
    }
    const std::size_t m = n1 + n2;
    if (m == 0) return 0.0;
    std::vector<std::vector<double>> cost(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) cost[i][j] = point_dist(A[i], B[j]);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = n2; j < m; ++j) cost[i][j] = diag_dist(A[i]);
    for (std::size_t i = n1; i < m; ++i)
        for (std::size_t j = 0; j < n2; ++j) cost[i][j] = diag_dist(B[j]);
    return solve_assignment(cost);
}

/// Essential classes never match the diagonal or finite points; they are
/// matched among themselves by birth, which on the line is optimally done
/// in sorted order. Unequal counts make the diagrams incomparable.
inline double essential_matching_cost(const std::vector<Rational>& A,
                                      const std::vector<Rational>& B) {
    if (A.size() != B.size()) return kIncomparable;
    std::vector<Rational> a = A, b = B;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Rational total(0);
    for (std::size_t i = 0; i < a.size(); ++i) total += abs(a[i] - b[i]);
    return to_double(total);
}

}  // namespace detail

/// Order-1 Wasserstein distance between persistence diagrams with Euclidean
/// ground metric, matched per homology dimension and summed. Returns
/// +infinity when the diagrams are incomparable in the requested mode.
/// Float output is for reporting; exact zero decisions go through
/// diagrams_equal.
inline double d2_wasserstein(const PersistenceDiagram& D1, const PersistenceDiagram& D2,
                             MatchingMode mode = MatchingMode::DiagonalAugmented) {
    if (D1.d != D2.d) throw std::invalid_argument("d2_wasserstein: dimension mismatch");
    double total = 0.0;
    for (int k = 0; k < D1.d; ++k) {
        const double ess = detail::essential_matching_cost(D1.essential[k], D2.essential[k]);
        if (ess == kIncomparable) return kIncomparable;
        const double fin = detail::finite_matching_cost(D1.finite[k], D2.finite[k], mode);
        if (fin == kIncomparable) return kIncomparable;
        total += ess + fin;
    }
    return total;
}

namespace detail {

/// Exhaustive matcher: every point of A goes to an unused point of B or (in
/// DiagonalAugmented mode) to the diagonal; leftover B points then pay their
/// diagonal distance too.
inline double brute_finite(const std::vector<DiagramPoint>& A, const std::vector<DiagramPoint>& B,
                           MatchingMode mode) {
    if (mode == MatchingMode::StrictBijection && A.size() != B.size()) return kIncomparable;
    std::vector<bool> used(B.size(), false);
    double best = kIncomparable;
    auto rec = [&](auto&& self, std::size_t i, double acc) -> void {
        if (acc >= best) return;
        if (i == A.size()) {
            double leftover = 0.0;
            for (std::size_t j = 0; j < B.size(); ++j)
                if (!used[j]) {
                    if (mode == MatchingMode::StrictBijection) return;  // unreachable for equal sizes
                    leftover += diag_dist(B[j]);
                }
            best = std::min(best, acc + leftover);
            return;
        }
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            self(self, i + 1, acc + point_dist(A[i], B[j]));
            used[j] = false;
        }
        if (mode == MatchingMode::DiagonalAugmented) self(self, i + 1, acc + diag_dist(A[i]));
    };
    rec(rec, 0, 0.0);
    return best;
}

}  // namespace detail

/// Exhaustive minimum over bijections (plus diagonal assignments in
/// DiagonalAugmented mode); oracle for d2_wasserstein.
inline double d2_brute(const PersistenceDiagram& D1, const PersistenceDiagram& D2,
                       MatchingMode mode = MatchingMode::DiagonalAugmented) {
    if (D1.d != D2.d) throw std::invalid_argument("d2_brute: dimension mismatch");
    for (int k = 0; k < D1.d; ++k)
        if (D1.finite[k].size() > 6 || D2.finite[k].size() > 6)
            throw std::invalid_argument("d2_brute: too many points (<= 6 per dimension)");
    double total = 0.0;
    for (int k = 0; k < D1.d; ++k) {
        const double ess = detail::essential_matching_cost(D1.essential[k], D2.essential[k]);
        if (ess == kIncomparable) return kIncomparable;
        const double fin = detail::brute_finite(D1.finite[k], D2.finite[k], mode);
        if (fin == kIncomparable) return kIncomparable;
        total += ess + fin;
    }
    return total;
}

/// Exact multiset equality of diagrams, per homology dimension, finite and
/// essential points compared separately. This is the zero-distance test the
/// isomorphism check relies on; it never touches floating point.
inline bool diagrams_equal(const PersistenceDiagram& D1, const PersistenceDiagram& D2) {
    if (D1.d != D2.d) return false;
    for (int k = 0; k < D1.d; ++k) {
        auto f1 = D1.finite[k], f2 = D2.finite[k];
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());
        if (f1 != f2) return false;
        auto e1 = D1.essential[k], e2 = D2.essential[k];
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        if (e1 != e2) return false;
    }
    return true;
}

}  // namespace oaiso
