#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_helpers.hpp"

using namespace oaiso;

namespace {

Filtration filtration_of(const Fraction& f) {
    return build_filtration(moments(pmf(counting_vector(f))));
}

Fraction even_parity_d3() {
    return make_fraction(3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

}  // namespace

TEST_CASE("filtration values of the worked example") {
    const Filtration filt = filtration_of(
        make_fraction(2, {{0, 0}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 1}}));
    CHECK(filt.values[0b01] == Rational(1, 2));
    CHECK(filt.values[0b10] == Rational(1, 2));
    CHECK(filt.values[0b11] == Rational(2, 3));
}

TEST_CASE("point mass at all-ones gives the all-zero filtration") {
    const Filtration filt = filtration_of(make_fraction(3, {{1, 1, 1}}));
    for (std::uint32_t a = 1; a < 8; ++a) CHECK(filt.values[a] == Rational(0));
}

TEST_CASE("even-parity filtration: vertices 1/2, edges 3/4, triangle 1") {
    const Filtration filt = filtration_of(even_parity_d3());
    for (std::uint32_t a = 1; a < 8; ++a) {
        const int pc = std::popcount(a);
        CHECK(filt.values[a] == (pc == 1 ? Rational(1, 2) : pc == 2 ? Rational(3, 4) : Rational(1)));
    }
}

TEST_CASE("build_filtration rejects non-moment input") {
    // mu rising along a face inclusion cannot come from a pmf
    MomentVector bad{2, {Rational(1), Rational(1, 4), Rational(1, 2), Rational(1, 2)}};
    CHECK_THROWS_AS(build_filtration(bad), filtration_error);
    MomentVector bad0{2, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
    CHECK_THROWS_AS(build_filtration(bad0), filtration_error);
    MomentVector range{2, {Rational(1), Rational(2), Rational(1, 2), Rational(1, 2)}};
    CHECK_THROWS_AS(build_filtration(range), filtration_error);
}

TEST_CASE("design-derived moment vectors always build a filtration") {
    Rng rng(31);
    for (int iter = 0; iter < 300; ++iter) {
        const int d = 2 + static_cast<int>(next_below(rng, 7));
        CHECK_NOTHROW(build_filtration(moments(pmf(testutil::random_counting_vector(rng, d)))));
    }
}

TEST_CASE("persistence reproduces the even-parity reference diagram") {
    const PersistenceDiagram dgm = persistence(filtration_of(even_parity_d3()));
    const std::vector<DiagramPoint> h0{{Rational(1, 2), Rational(3, 4)},
                                       {Rational(1, 2), Rational(3, 4)}};
    CHECK(dgm.finite[0] == h0);
    CHECK(dgm.essential[0] == std::vector<Rational>{Rational(1, 2)});
    CHECK(dgm.finite[1] == std::vector<DiagramPoint>{{Rational(3, 4), Rational(1)}});
    CHECK(dgm.essential[1].empty());
    CHECK(dgm.finite[2].empty());
    CHECK(dgm.essential[2].empty());
    CHECK(dgm.zero_persistence_dropped == 0);
}

TEST_CASE("persistence of a one-factor design is a single essential vertex") {
    const auto f = make_fraction(1, {{1}, {0}, {1}});
    const PersistenceDiagram dgm = persistence(filtration_of(f));
    CHECK(dgm.finite[0].empty());
    CHECK(dgm.essential[0] == std::vector<Rational>{Rational(1, 3)});  // 1 - 2/3
}

TEST_CASE("persistence of the worked example") {
    const PersistenceDiagram dgm = persistence(filtration_of(
        make_fraction(2, {{0, 0}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 1}})));
    CHECK(dgm.finite[0] == std::vector<DiagramPoint>{{Rational(1, 2), Rational(2, 3)}});
    CHECK(dgm.essential[0] == std::vector<Rational>{Rational(1, 2)});
    CHECK(dgm.finite[1].empty());
}

TEST_CASE("diagram bookkeeping: 2*(finite+dropped) + essential = 2^d - 1") {
    Rng rng(32);
    for (int iter = 0; iter < 120; ++iter) {
        const int d = 1 + static_cast<int>(next_below(rng, 6));
        const PersistenceDiagram dgm =
            persistence(build_filtration(moments(pmf(testutil::random_counting_vector(rng, d)))));
        const std::size_t finite = dgm.finite_count() + dgm.zero_persistence_dropped;
        CHECK(2 * finite + dgm.essential_count() == cell_count(d) - 1);
    }
}

TEST_CASE("exactly one essential class, in dimension 0, born at the minimum vertex value") {
    Rng rng(33);
    for (int iter = 0; iter < 80; ++iter) {
        const int d = 1 + static_cast<int>(next_below(rng, 6));
        const Filtration filt =
            build_filtration(moments(pmf(testutil::random_counting_vector(rng, d))));
        const PersistenceDiagram dgm = persistence(filt);
        CHECK(dgm.essential_count() == 1);
        REQUIRE(dgm.essential[0].size() == 1);
        Rational min_vertex = filt.values[1];
        for (int i = 0; i < d; ++i)
            min_vertex = std::min(min_vertex, filt.values[std::uint32_t{1} << i]);
        CHECK(dgm.essential[0][0] == min_vertex);
        CHECK(dgm.finite[d - 1].empty());
    }
}

TEST_CASE("strength-1 OAs put the essential birth at exactly 1/2") {
    for (const auto& v : enumerate_oas(3, 8, 1)) {
        const PersistenceDiagram dgm = persistence(build_filtration(moments(pmf(v))));
        CHECK(dgm.essential[0] == std::vector<Rational>{Rational(1, 2)});
    }
}

TEST_CASE("diagram point counts match the Betti oracle at every critical value") {
    Rng rng(34);
    for (int iter = 0; iter < 60; ++iter) {
        const int d = 1 + static_cast<int>(next_below(rng, 4));
        const Filtration filt =
            build_filtration(moments(pmf(testutil::random_counting_vector(rng, d))));
        const PersistenceDiagram dgm = persistence(filt);
        std::set<Rational> critical(filt.values.begin() + 1, filt.values.end());
        for (const Rational& s : critical) {
            const auto betti = betti_at(filt, s);
            const auto alive = testutil::alive_at(dgm, s);
            CHECK(betti == alive);
        }
    }
}

TEST_CASE("betti_at reference values for the even-parity design") {
    const Filtration filt = filtration_of(even_parity_d3());
    CHECK(betti_at(filt, Rational(1, 2)) == std::vector<std::int64_t>{3, 0, 0});
    CHECK(betti_at(filt, Rational(3, 4)) == std::vector<std::int64_t>{1, 1, 0});
    CHECK(betti_at(filt, Rational(1)) == std::vector<std::int64_t>{1, 0, 0});
    // below the first vertex the complex is empty
    CHECK(betti_at(filt, Rational(1, 4)) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("diagrams are invariant under pure factor relabelings") {
    Rng rng(35);
    for (int iter = 0; iter < 50; ++iter) {
        const int d = 2 + static_cast<int>(next_below(rng, 4));
        const CountingVector v = testutil::random_counting_vector(rng, d);
        IsoTransform g = random_transform(rng, d);
        g.flips = 0;
        const auto d1 = persistence(build_filtration(moments(pmf(v))));
        const auto d2 = persistence(build_filtration(moments(pmf(apply_transform(v, g)))));
        CHECK(diagrams_equal(d1, d2));
    }
}
