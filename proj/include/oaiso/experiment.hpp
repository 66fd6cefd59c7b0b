#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "canonical.hpp"
#include "design.hpp"
#include "isocheck.hpp"
#include "metrics.hpp"
#include "rng.hpp"

namespace oaiso {

struct ConjecturePair {
    std::size_t i = 0, j = 0;
    double d2 = 0.0;
    bool diagrams_identical = false;  // a true value is a conjecture counterexample
};

/// Pairwise diagram distances between verified non-isomorphic
/// representatives. Any identical-diagram pair contradicts the conjecture
/// that non-isomorphic designs have d2 > 0, and is surfaced, never dropped.
struct ConjectureReport {
    std::size_t n_designs = 0;
    std::vector<ConjecturePair> pairs;
    double min_d2 = 0.0;
    std::vector<ConjecturePair> counterexamples;
};

inline ConjectureReport conjecture_scan(const std::vector<Fraction>& reps) {
    ConjectureReport report;
    report.n_designs = reps.size();
    if (reps.size() < 2) return report;

    std::vector<CountingVector> vs;
    vs.reserve(reps.size());
    for (const auto& f : reps) vs.push_back(counting_vector(f));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (are_isomorphic_exact(vs[i], vs[j]))
                throw std::invalid_argument("conjecture_scan: inputs " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are isomorphic");

    std::vector<PersistenceDiagram> dgms;
    dgms.reserve(vs.size());
    for (const auto& v : vs) dgms.push_back(persistence(build_filtration(moments(pmf(v)))));

    bool first = true;
    for (std::size_t i = 0; i < dgms.size(); ++i) {
        for (std::size_t j = i + 1; j < dgms.size(); ++j) {
            ConjecturePair p;
            p.i = i;
            p.j = j;
            p.d2 = d2_wasserstein(dgms[i], dgms[j], MatchingMode::DiagonalAugmented);
            p.diagrams_identical = diagrams_equal(dgms[i], dgms[j]);
            report.pairs.push_back(p);
            if (p.diagrams_identical) report.counterexamples.push_back(p);
            if (first || p.d2 < report.min_d2) report.min_d2 = p.d2;
            first = false;
        }
    }
    return report;
}

struct ConfusionCounts {
    std::int64_t true_positive = 0;   // isomorphic pair, verdict isomorphic
    std::int64_t false_negative = 0;  // isomorphic pair, verdict non-isomorphic
    std::int64_t true_negative = 0;
    std::int64_t false_positive = 0;  // would contradict the exact oracle

    std::int64_t total() const {
        return true_positive + false_negative + true_negative + false_positive;
    }
};

struct PairRecord {
    std::size_t index = 0;
    std::size_t class_i = 0, class_j = 0;
    bool truth = false;
    bool verdict = false;
    IsoCertificate certificate = IsoCertificate::Exhausted;
    std::int64_t iterations_used = 0;
};

struct ExperimentReport {
    int d = 0;
    std::int64_t runs = 0;   // N
    int strength = 0;        // min over classes of their max strength
    std::int64_t T = 0;
    std::uint64_t seed = 0;
    std::size_t n_pairs = 0;
    ConfusionCounts confusion;
    std::vector<PairRecord> pairs;
    double wall_seconds = 0.0;
};

/// Classification experiment: each sampled pair compares class i against a
/// uniformly transformed copy of class j, with i == j half the time (in
/// expectation), and runs the Random-mode test with the given T. Ground
/// truth is i == j; inputs must be distinct class representatives. Pair k
/// draws from a seed derived as splitmix64(seed + k), so results are
/// reproducible and independent of evaluation order.
inline ExperimentReport classification_experiment(const std::vector<Fraction>& classes,
                                                  std::size_t n_pairs, std::int64_t T,
                                                  std::uint64_t seed) {
    if (classes.empty()) throw std::invalid_argument("classification_experiment: no classes");
    const auto start = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.d = classes.front().d;
    report.runs = static_cast<std::int64_t>(classes.front().runs.size());
    report.T = T;
    report.seed = seed;
    report.n_pairs = n_pairs;

    report.strength = max_strength(counting_vector(classes.front()));
    for (const auto& f : classes) {
        if (f.d != report.d || static_cast<std::int64_t>(f.runs.size()) != report.runs)
            throw std::invalid_argument("classification_experiment: classes must share d and N");
        report.strength = std::min(report.strength, max_strength(counting_vector(f)));
    }

    for (std::size_t k = 0; k < n_pairs; ++k) {
        Rng rng(derive_seed(seed, k));
        const bool same = next_below(rng, 2) == 1;
        const std::size_t i = static_cast<std::size_t>(next_below(rng, classes.size()));
        std::size_t j = i;
        if (!same && classes.size() > 1)
            j = (i + 1 + next_below(rng, classes.size() - 1)) % classes.size();
        const Fraction f2 = apply_transform(classes[j], random_transform(rng, report.d));
        const IsoVerdict v = iso_check(classes[i], f2, T, rng, IsoMode::Random);

        PairRecord rec;
        rec.index = k;
        rec.class_i = i;
        rec.class_j = j;
        rec.truth = (i == j);
        rec.verdict = v.isomorphic;
        rec.certificate = v.certificate;
        rec.iterations_used = v.iterations_used;
        report.pairs.push_back(rec);

        if (rec.truth && rec.verdict) ++report.confusion.true_positive;
        if (rec.truth && !rec.verdict) ++report.confusion.false_negative;
        if (!rec.truth && !rec.verdict) ++report.confusion.true_negative;
        if (!rec.truth && rec.verdict) ++report.confusion.false_positive;
    }

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace oaiso
