#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpinv/samplers.hpp"
#include "mpinv/signed_cube_set.hpp"
#include "test_support.hpp"

using namespace mpinv;
using namespace mpinv::testing;

TEST_CASE("cube rank is containment") {
    CubeSpec c({0, 0}, {1, 1});
    CHECK(cube_rank(c, {0, 1}, {1, 1}) == 1);
    CHECK(cube_rank(c, {1, 1}, {0, 0}) == 0);
    CHECK(cube_rank(CubeSpec({2}, {2}), {2}, {2}) == 1);
}

TEST_CASE("signed rank sums coefficients over containing cubes") {
    SignedCubeSet X(1);
    X.add_term(CubeSpec({0}, {2}), 1);
    X.add_term(CubeSpec({1}, {3}), 1);
    CHECK(X.signed_rank({1}, {2}) == 2);

    SUBCASE("opposite coefficients cancel out of the term map") {
        SignedCubeSet Y(2);
        Y.add_term(CubeSpec({0, 0}, {1, 1}), 1);
        Y.add_term(CubeSpec({0, 0}, {1, 1}), -1);
        CHECK(Y.terms.empty());
        CHECK(Y.signed_rank({0, 0}, {1, 1}) == 0);
    }
    SUBCASE("inclusion-exclusion corner") {
        SignedCubeSet Y(2);
        Y.add_term(CubeSpec({0, 0}, {1, 0}), 1);
        Y.add_term(CubeSpec({0, 0}, {0, 1}), 1);
        Y.add_term(CubeSpec({0, 0}, {0, 0}), -1);
        CHECK(Y.signed_rank({0, 0}, {0, 0}) == 1);
    }
}

TEST_CASE("cube order: birth lexicographic, death reversed on ties") {
    CHECK(cube_order_cmp(CubeSpec({0}, {2}), CubeSpec({1}, {3})) == std::strong_ordering::less);
    CHECK(cube_order_cmp(CubeSpec({0}, {3}), CubeSpec({0}, {2})) == std::strong_ordering::less);
    CHECK(cube_order_cmp(CubeSpec({0, 0}, {1, 1}), CubeSpec({0, 0}, {1, 1})) == std::strong_ordering::equal);
}

TEST_CASE("scan order never revisits a pair touched by a later cube") {
    GridBox box({0, 0}, {2, 2});
    auto pairs = ordered_box_pairs(box);
    auto position = [&](const Point& u, const Point& v) {
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == u && pairs[i].second == v) return i;
        return pairs.size();
    };
    for (const auto& [x, y] : pairs) {
        CubeSpec cube(x, y);
        size_t pivot = position(x, y);
        GridBox inner(cube.x, cube.y);
        for (const auto& u : inner.all_points())
            for (const auto& v : inner.all_points())
                if (leq(u, v)) CHECK(position(u, v) >= pivot);
    }
}

TEST_CASE("decompose recovers cube sums") {
    auto m = PersistenceModule::from_cubes(1, {{CubeSpec({0}, {2}), 1}, {CubeSpec({1}, {3}), 1}});
    RankInvariant rho = m.rank_table();
    SignedCubeSet X = decompose(rho);
    REQUIRE(X.terms.size() == 2);
    CHECK(X.terms.at(CubeSpec({0}, {2})) == 1);
    CHECK(X.terms.at(CubeSpec({1}, {3})) == 1);
    for (const auto& u : rho.box.all_points())
        for (const auto& v : rho.box.all_points())
            if (leq(u, v)) CHECK(X.signed_rank(u, v) == rho.at(u, v));
}

TEST_CASE("decompose of the zero invariant is empty") {
    RankInvariant zero(GridBox({0, 0}, {2, 2}));
    CHECK(decompose(zero).terms.empty());
}

TEST_CASE("corner-shaped module needs a negative correction term") {
    auto m = l_shape_module();
    REQUIRE(m.validate().ok());
    RankInvariant rho = m.rank_table();
    SignedCubeSet X = decompose(rho);
    REQUIRE(X.terms.size() == 3);
    CHECK(X.terms.at(CubeSpec({0, 0}, {1, 0})) == 1);
    CHECK(X.terms.at(CubeSpec({0, 0}, {0, 1})) == 1);
    CHECK(X.terms.at(CubeSpec({0, 0}, {0, 0})) == -1);
    for (const auto& u : rho.box.all_points())
        for (const auto& v : rho.box.all_points())
            if (leq(u, v)) CHECK(X.signed_rank(u, v) == rho.at(u, v));
}

TEST_CASE("decompose rejects tables violating the support conditions") {
    SUBCASE("value on a non-ordered pair") {
        RankInvariant bad(GridBox({0, 0}, {1, 1}));
        bad.set({1, 0}, {0, 1}, 1);
        CHECK_THROWS_AS(decompose(bad), std::invalid_argument);
    }
    SUBCASE("support escaping the box") {
        RankInvariant bad(GridBox({0}, {1}));
        bad.set({2}, {3}, 1);
        CHECK_THROWS_AS(decompose(bad), std::invalid_argument);
    }
}

TEST_CASE("reconstruct") {
    SUBCASE("empty set gives the zero table") {
        CHECK(reconstruct(SignedCubeSet(2), GridBox({0, 0}, {1, 1})).values.empty());
    }
    SUBCASE("cube outside the box is an error") {
        SignedCubeSet X(1);
        X.add_term(CubeSpec({0}, {5}), 1);
        CHECK_THROWS_AS(reconstruct(X, GridBox({0}, {3})), std::invalid_argument);
    }
}

TEST_CASE("round trips are exact both ways") {
    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform(1, 3);
        int hi = n == 3 ? 2 : 4;
        SignedCubeSet X = random_signed_cube_set(rng, n, 0, hi, 8, 3);
        GridBox box(Point(n, 0), Point(n, hi));
        RankInvariant rho = reconstruct(X, box);
        SignedCubeSet back = decompose(rho);
        CHECK(back == X);
        CHECK(reconstruct(back, box).same_values(rho));
    }
}

TEST_CASE("random tables satisfying the support conditions decompose exactly") {
    Rng rng(103);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(1, 2);
        GridBox box(Point(n, 0), Point(n, 3));
        RankInvariant rho(box);
        auto pts = box.all_points();
        for (const auto& u : pts)
            for (const auto& v : pts)
                if (leq(u, v) && rng.chance(0.3)) rho.set(u, v, rng.uniform(-3, 3));
        SignedCubeSet X = decompose(rho);
        CHECK(reconstruct(X, box).same_values(rho));
        for (const auto& [cube, coeff] : X.terms) {
            CHECK(coeff != 0);
            CHECK(leq(cube.x, cube.y));
        }
    }
}

TEST_CASE("greedy peeling keeps the processed prefix at zero") {
    // Re-run the algorithm by hand, checking the loop invariant after every
    // subtraction, and compare the result against the library path.
    Rng rng(107);
    for (int t = 0; t < 10; ++t) {
        int n = rng.uniform(1, 2);
        SignedCubeSet X = random_signed_cube_set(rng, n, 0, 3, 6, 3);
        GridBox box(Point(n, 0), Point(n, 3));
        RankInvariant rho = reconstruct(X, box);

        RankInvariant residual = rho;
        SignedCubeSet mine(n);
        auto pairs = ordered_box_pairs(box);
        for (size_t i = 0; i < pairs.size(); ++i) {
            const auto& [x, y] = pairs[i];
            long long c = residual.at(x, y);
            if (c == 0) continue;
            CubeSpec cube(x, y);
            mine.add_term(cube, c);
            GridBox inner(cube.x, cube.y);
            for (const auto& u : inner.all_points())
                for (const auto& v : inner.all_points())
                    if (leq(u, v)) residual.add(u, v, -c);
            for (size_t j = 0; j <= i; ++j) CHECK(residual.at(pairs[j].first, pairs[j].second) == 0);
        }
        CHECK(residual.values.empty());
        CHECK(mine == decompose(rho));
    }
}

TEST_CASE("cube modules with multiplicities decompose to their input multiset") {
    Rng rng(109);
    for (int t = 0; t < 25; ++t) {
        int n = rng.uniform(1, 2);
        auto cubes = random_cube_list(rng, n, 0, 3, rng.uniform(1, 4), 3, true);
        auto m = PersistenceModule::from_cubes(n, cubes);
        SignedCubeSet X = decompose(m.rank_table());
        CHECK(X == as_signed_set(n, cubes));
        CHECK(X.all_positive());
    }
}
