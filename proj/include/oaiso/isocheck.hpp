#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "design.hpp"
#include "filtration.hpp"
#include "metrics.hpp"
#include "persistence.hpp"
#include "rng.hpp"
#include "transform.hpp"

namespace oaiso {

enum class IsoCertificate {
    PmfDistancePositive,  // exact: the pmfs are not even permutations of one another
    DiagramMatchFound,    // a transform carried f2 onto a diagram equal to f1's
    Exhausted,            // T random transforms tried, no match; "considered non-isomorphic"
    ExhaustiveNoMatch,    // exact: the whole group tried, no diagram matched
};

enum class IsoMode { Random, Exhaustive };

struct IsoVerdict {
    bool isomorphic = false;
    IsoCertificate certificate = IsoCertificate::Exhausted;
    std::optional<IsoTransform> witness;  // present iff DiagramMatchFound
    std::int64_t iterations_used = 0;
    std::int64_t distinct_transforms = 0;  // distinct candidates among those tried
};

inline const char* to_string(IsoCertificate c) {
    switch (c) {
        case IsoCertificate::PmfDistancePositive: return "PmfDistancePositive";
        case IsoCertificate::DiagramMatchFound: return "DiagramMatchFound";
        case IsoCertificate::Exhausted: return "Exhausted";
        case IsoCertificate::ExhaustiveNoMatch: return "ExhaustiveNoMatch";
    }
    return "?";
}

inline const char* to_string(IsoMode m) {
    return m == IsoMode::Random ? "Random" : "Exhaustive";
}

/// Randomized isomorphism test. Steps: (1) if the pmf multisets differ
/// (d1 > 0), the designs are certified non-isomorphic; (2) otherwise walk
/// candidate transforms g of f2 — T uniform draws in Random mode, the whole
/// group in Exhaustive mode — screening each candidate by its sorted
/// filtration-value multiset and computing the persistence diagram only on a
/// screen hit; an exact diagram match returns isomorphic with g as witness.
/// A negative Random verdict is "considered non-isomorphic", not certified;
/// a negative Exhaustive verdict is exact up to diagram collisions.
inline IsoVerdict iso_check(const Fraction& f1, const Fraction& f2, std::int64_t T, Rng& rng,
                            IsoMode mode = IsoMode::Random) {
    if (f1.d != f2.d) throw std::invalid_argument("iso_check: dimension mismatch");
    if (f1.runs.size() != f2.runs.size())
        throw std::invalid_argument("iso_check: designs must have the same run count");
    if (mode == IsoMode::Random && T < 1)
        throw std::invalid_argument("iso_check: T must be >= 1");

    const int d = f1.d;
    const CountingVector v1 = counting_vector(f1);
    const CountingVector v2 = counting_vector(f2);

    IsoVerdict verdict;
    if (d1_wasserstein(pmf(v1), pmf(v2)) > Rational(0)) {
        verdict.certificate = IsoCertificate::PmfDistancePositive;
        return verdict;
    }

    const Filtration filt1 = build_filtration(moments(pmf(v1)));
    const std::vector<Rational> screen1 = filtration_values_sorted(filt1);
    const PersistenceDiagram dgm1 = persistence(filt1);

    std::set<std::pair<std::vector<int>, std::uint32_t>> seen;
    auto try_candidate = [&](const IsoTransform& g) -> bool {
        ++verdict.iterations_used;
        if (seen.emplace(g.sigma, g.flips).second) ++verdict.distinct_transforms;
        const CountingVector v2g = apply_transform(v2, g);
        const Filtration filt2 = build_filtration(moments(pmf(v2g)));
        if (filtration_values_sorted(filt2) != screen1) return false;
        if (!diagrams_equal(dgm1, persistence(filt2))) return false;
        verdict.isomorphic = true;
        verdict.certificate = IsoCertificate::DiagramMatchFound;
        verdict.witness = g;
        return true;
    };

    if (mode == IsoMode::Exhaustive) {
        for (const IsoTransform& g : all_transforms(d))
            if (try_candidate(g)) return verdict;
        verdict.certificate = IsoCertificate::ExhaustiveNoMatch;
        return verdict;
    }
    for (std::int64_t i = 0; i < T; ++i)
        if (try_candidate(random_transform(rng, d))) return verdict;
    verdict.certificate = IsoCertificate::Exhausted;
    return verdict;
}

}  // namespace oaiso
