#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace oaiso;

namespace {

std::vector<Fraction> desk_classes(int d, std::int64_t N, int t) {
    std::vector<Fraction> out;
    for (const auto& rep : reduce_to_classes(enumerate_oas(d, N, t)).representatives)
        out.push_back(to_fraction(rep));
    return out;
}

}  // namespace

TEST_CASE("conjecture_scan on the two (2,6,1) classes") {
    const auto reps = desk_classes(2, 6, 1);
    REQUIRE(reps.size() == 2);
    const ConjectureReport r = conjecture_scan(reps);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].d2 > 0.0);
    CHECK_FALSE(r.pairs[0].diagrams_identical);
    CHECK(r.counterexamples.empty());
    CHECK(r.min_d2 > 0.0);
}

TEST_CASE("conjecture_scan on a singleton is empty") {
    const auto reps = desk_classes(4, 12, 2);
    REQUIRE(reps.size() == 1);
    const ConjectureReport r = conjecture_scan(reps);
    CHECK(r.pairs.empty());
    CHECK(r.counterexamples.empty());
}

TEST_CASE("conjecture_scan over d=3 strength-2 classes reports all positive distances") {
    const auto reps = desk_classes(3, 8, 2);
    const ConjectureReport r = conjecture_scan(reps);
    for (const auto& p : r.pairs) {
        CHECK(p.d2 > 0.0);
        CHECK_FALSE(p.diagrams_identical);
    }
}

TEST_CASE("conjecture_scan rejects isomorphic inputs") {
    Rng rng(61);
    const auto reps = desk_classes(3, 8, 2);
    std::vector<Fraction> bad = reps;
    bad.push_back(to_fraction(apply_transform(counting_vector(reps[0]), random_transform(rng, 3))));
    CHECK_THROWS_AS(conjecture_scan(bad), std::invalid_argument);
}

TEST_CASE("classification experiment at desk scale makes no mistakes with large T") {
    const auto classes = desk_classes(3, 8, 2);
    const ExperimentReport r = classification_experiment(classes, 60, 64, 4242);
    CHECK(r.confusion.total() == 60);
    CHECK(r.confusion.false_positive == 0);
    CHECK(r.confusion.false_negative == 0);
    CHECK(r.pairs.size() == 60);
    CHECK(r.d == 3);
    CHECK(r.runs == 8);
    CHECK(r.strength == 2);
    // ground truth is i == j and every verdict matches it
    for (const auto& p : r.pairs) {
        CHECK(p.truth == (p.class_i == p.class_j));
        CHECK(p.verdict == p.truth);
    }
}

TEST_CASE("empty experiment produces an empty report") {
    const auto classes = desk_classes(2, 6, 1);
    const ExperimentReport r = classification_experiment(classes, 0, 10, 7);
    CHECK(r.n_pairs == 0);
    CHECK(r.pairs.empty());
    CHECK(r.confusion.total() == 0);
}

TEST_CASE("experiment reports are reproducible bit for bit") {
    const auto classes = desk_classes(3, 8, 2);
    const ExperimentReport a = classification_experiment(classes, 30, 16, 999);
    const ExperimentReport b = classification_experiment(classes, 30, 16, 999);
    Json ja = to_json(a), jb = to_json(b);
    // wall clock is the one legitimately varying field
    ja.erase("wall_seconds");
    jb.erase("wall_seconds");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("experiment confusion counts sum to the sample size") {
    const auto classes = desk_classes(4, 8, 2);
    const ExperimentReport r = classification_experiment(classes, 40, 8, 31337);
    CHECK(r.confusion.total() == 40);
    CHECK(r.confusion.false_positive == 0);  // soundness: never against the oracle
}
