#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace oaiso;

namespace {

Fraction paper_f() {
    return make_fraction(2, {{0, 0}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 1}});
}

Fraction paper_f1() {
    return make_fraction(2, {{0, 1}, {0, 1}, {0, 0}, {1, 1}, {1, 0}, {1, 0}});
}

}  // namespace

TEST_CASE("the paper pair is recognized as isomorphic, with a valid witness") {
    Rng rng(51);
    const IsoVerdict v = iso_check(paper_f(), paper_f1(), 50, rng, IsoMode::Random);
    CHECK(v.isomorphic);
    CHECK(v.certificate == IsoCertificate::DiagramMatchFound);
    REQUIRE(v.witness.has_value());
    // the witness transform carries f2 onto a diagram equal to f1's, and the
    // exact oracle confirms the verdict
    const auto d1 = persistence(build_filtration(moments(pmf(counting_vector(paper_f())))));
    const auto f2w = apply_transform(paper_f1(), *v.witness);
    const auto d2 = persistence(build_filtration(moments(pmf(counting_vector(f2w)))));
    CHECK(diagrams_equal(d1, d2));
    CHECK(are_isomorphic_exact(counting_vector(paper_f()), counting_vector(paper_f1())));
}

TEST_CASE("a design is isomorphic to itself") {
    Rng rng(52);
    CHECK(iso_check(paper_f(), paper_f(), 10, rng).isomorphic);
}

TEST_CASE("the derived negative pair passes the pmf screen but fails exhaustively") {
    // sorted count multisets coincide, so d1 = 0; no transform matches
    const Fraction f1 = to_fraction(CountingVector{2, {2, 1, 1, 2}});
    const Fraction f2 = to_fraction(CountingVector{2, {2, 2, 1, 1}});
    Rng rng(53);
    const IsoVerdict v = iso_check(f1, f2, 1, rng, IsoMode::Exhaustive);
    CHECK_FALSE(v.isomorphic);
    CHECK(v.certificate == IsoCertificate::ExhaustiveNoMatch);
    CHECK(v.iterations_used == 8);  // the full d=2 group
    CHECK(v.distinct_transforms == 8);
}

TEST_CASE("a positive d1 distance short-circuits with a certificate") {
    const Fraction f1 = to_fraction(CountingVector{2, {3, 1, 1, 1}});
    const Fraction f2 = to_fraction(CountingVector{2, {2, 2, 1, 1}});
    Rng rng(54);
    const IsoVerdict v = iso_check(f1, f2, 100, rng);
    CHECK_FALSE(v.isomorphic);
    CHECK(v.certificate == IsoCertificate::PmfDistancePositive);
    CHECK(v.iterations_used == 0);
}

TEST_CASE("random mode can exhaust T and report a non-certified negative") {
    // an isomorphic pair missed at T=1 with this seed stays "considered
    // non-isomorphic", certificate Exhausted
    const CountingVector base{3, {2, 0, 0, 1, 0, 1, 1, 0}};
    IsoTransform g = identity_transform(3);
    g.flips = 0b101;
    const Fraction f1 = to_fraction(base);
    const Fraction f2 = to_fraction(apply_transform(base, g));
    REQUIRE(are_isomorphic_exact(counting_vector(f1), counting_vector(f2)));
    bool saw_exhausted = false;
    for (std::uint64_t seed = 0; seed < 64 && !saw_exhausted; ++seed) {
        Rng rng(seed);
        const IsoVerdict v = iso_check(f1, f2, 1, rng);
        if (!v.isomorphic) {
            CHECK(v.certificate == IsoCertificate::Exhausted);
            CHECK(v.iterations_used == 1);
            saw_exhausted = true;
        }
    }
    CHECK(saw_exhausted);
}

TEST_CASE("exhaustive mode agrees with the exact oracle on desk-scale classes") {
    Rng rng(55);
    for (const auto& params : {std::tuple{2, 6, 1}, std::tuple{3, 8, 2}}) {
        const auto [d, N, t] = params;
        const auto reduction = reduce_to_classes(enumerate_oas(d, N, t));
        std::vector<Fraction> designs;
        for (const auto& rep : reduction.representatives) {
            designs.push_back(to_fraction(rep));
            designs.push_back(to_fraction(apply_transform(rep, random_transform(rng, d))));
        }
        for (std::size_t i = 0; i < designs.size(); ++i) {
            for (std::size_t j = 0; j < designs.size(); ++j) {
                const bool oracle = are_isomorphic_exact(counting_vector(designs[i]),
                                                         counting_vector(designs[j]));
                const IsoVerdict v = iso_check(designs[i], designs[j], 1, rng, IsoMode::Exhaustive);
                CHECK(v.isomorphic == oracle);
            }
        }
    }
}

TEST_CASE("DiagramMatchFound verdicts are always confirmed by the oracle") {
    Rng rng(56);
    for (int iter = 0; iter < 150; ++iter) {
        const int d = 2 + static_cast<int>(next_below(rng, 3));
        const std::size_t n = 4 + next_below(rng, 8);
        const Fraction f1 = testutil::random_fraction(rng, d, n);
        Fraction f2 = (iter % 2) ? apply_transform(f1, random_transform(rng, d))
                                 : testutil::random_fraction(rng, d, n);
        const IsoVerdict v = iso_check(f1, f2, 20, rng);
        if (v.certificate == IsoCertificate::DiagramMatchFound)
            CHECK(are_isomorphic_exact(counting_vector(f1), counting_vector(f2)));
        if (v.certificate == IsoCertificate::PmfDistancePositive)
            CHECK_FALSE(are_isomorphic_exact(counting_vector(f1), counting_vector(f2)));
    }
}

TEST_CASE("true-positive rate is monotone in T") {
    const CountingVector base = enumerate_oas(4, 8, 2).front();
    Rng setup(57);
    const Fraction f1 = to_fraction(base);
    const Fraction f2 = to_fraction(apply_transform(base, random_transform(setup, 4)));
    int hits1 = 0, hits8 = 0, hits64 = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng r1(seed), r8(seed), r64(seed);
        if (iso_check(f1, f2, 1, r1).isomorphic) ++hits1;
        if (iso_check(f1, f2, 8, r8).isomorphic) ++hits8;
        if (iso_check(f1, f2, 64, r64).isomorphic) ++hits64;
    }
    CHECK(hits1 <= hits8);
    CHECK(hits8 <= hits64);
    CHECK(hits64 > 0);
}

TEST_CASE("verdicts are deterministic given seed and mode") {
    const Fraction f1 = paper_f();
    const Fraction f2 = paper_f1();
    Rng a(58), b(58);
    const IsoVerdict va = iso_check(f1, f2, 25, a);
    const IsoVerdict vb = iso_check(f1, f2, 25, b);
    CHECK(va.isomorphic == vb.isomorphic);
    CHECK(va.iterations_used == vb.iterations_used);
    CHECK(va.witness.has_value() == vb.witness.has_value());
    if (va.witness) CHECK(*va.witness == *vb.witness);
}

TEST_CASE("iso_check input validation") {
    Rng rng(59);
    CHECK_THROWS_AS(iso_check(paper_f(), make_fraction(3, {{0, 0, 0}}), 5, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(iso_check(paper_f(), make_fraction(2, {{0, 0}}), 5, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(iso_check(paper_f(), paper_f1(), 0, rng, IsoMode::Random),
                    std::invalid_argument);
}
