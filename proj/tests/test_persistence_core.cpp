#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mpinv/persistence_module.hpp"
#include "mpinv/samplers.hpp"
#include "test_support.hpp"

using namespace mpinv;
using namespace mpinv::testing;

namespace {

// Plain rational Gaussian elimination, the reference for the fraction-free
// rank below.
int rank_by_rational_elimination(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(static_cast<size_t>(m.rows()),
                                         std::vector<Rational>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(m.at(i, j));
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        for (int i = rank + 1; i < m.rows(); ++i) {
            Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                         a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int j = col; j < m.cols(); ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("fraction-free rank agrees with rational elimination") {
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        int rows = rng.uniform(0, 5), cols = rng.uniform(0, 5);
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng.chance(0.7)) m.at(i, j) = rng.uniform(-4, 4);
        CHECK(m.rank() == rank_by_rational_elimination(m));
    }
    SUBCASE("rank-deficient products") {
        for (int t = 0; t < 100; ++t) {
            int a = rng.uniform(1, 4), b = rng.uniform(1, 3), c = rng.uniform(1, 4);
            IntMatrix left(a, b), right(b, c);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) left.at(i, j) = rng.uniform(-3, 3);
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < c; ++j) right.at(i, j) = rng.uniform(-3, 3);
            IntMatrix prod = left * right;
            CHECK(prod.rank() == rank_by_rational_elimination(prod));
            CHECK(prod.rank() <= b);
        }
    }
}

TEST_CASE("identity chain validates cleanly") {
    PersistenceModule m{GridBox({0}, {2})};
    std::fill(m.dims.begin(), m.dims.end(), 1);
    m.maps[0][0] = IntMatrix::identity(1);
    m.maps[0][1] = IntMatrix::identity(1);
    CHECK(m.validate().ok());
}

TEST_CASE("non-commuting square is reported with its location") {
    PersistenceModule m{GridBox({0, 0}, {1, 1})};
    std::fill(m.dims.begin(), m.dims.end(), 1);
    IntMatrix one = IntMatrix::identity(1);
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    m.maps[0][static_cast<size_t>(m.box.index_of({0, 0}))] = one;
    m.maps[1][static_cast<size_t>(m.box.index_of({0, 0}))] = one;
    m.maps[1][static_cast<size_t>(m.box.index_of({1, 0}))] = one;
    m.maps[0][static_cast<size_t>(m.box.index_of({0, 1}))] = two;  // breaks the square
    auto report = m.validate();
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::commutativity);
    CHECK(report.violations[0].at == Point{0, 0});
}

TEST_CASE("shape mismatch is a violation, not a crash") {
    PersistenceModule m{GridBox({0}, {1})};
    m.dims = {1, 1};
    m.maps[0][0] = IntMatrix(2, 1);
    auto report = m.validate();
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].kind == Violation::Kind::shape_mismatch);
}

TEST_CASE("cube-sum construction") {
    SUBCASE("single interval") {
        PersistenceModule m = interval_module(0, 2);
        CHECK(m.dim_at({0}) == 1);
        CHECK(m.dim_at({1}) == 1);
        CHECK(m.dim_at({2}) == 1);
        CHECK(m.edge_map({0}, 0) == IntMatrix::identity(1));
        CHECK(m.validate().ok());
    }
    SUBCASE("two overlapping intervals") {
        auto m = PersistenceModule::from_cubes(1, {{CubeSpec({0}, {2}), 1}, {CubeSpec({1}, {3}), 1}});
        CHECK(m.dim_at({0}) == 1);
        CHECK(m.dim_at({1}) == 2);
        CHECK(m.dim_at({2}) == 2);
        CHECK(m.dim_at({3}) == 1);
    }
    SUBCASE("planar cube supported on a 3x4 subgrid") {
        auto m = PersistenceModule::from_cubes(2, {{CubeSpec({0, 0}, {2, 3}), 1}});
        for (const auto& p : m.box.all_points()) CHECK(m.dim_at(p) == 1);
        CHECK(m.dim_at({3, 0}) == 0);  // outside the box
    }
    SUBCASE("empty input is rejected") {
        CHECK_THROWS_WITH_AS(PersistenceModule::from_cubes(1, {}), "empty module not representable",
                             std::invalid_argument);
    }
    SUBCASE("randomized cube modules always validate") {
        Rng rng(11);
        for (int t = 0; t < 30; ++t) {
            int n = rng.uniform(1, 3);
            auto cubes = random_cube_list(rng, n, 0, 3, rng.uniform(1, 4), 2, false);
            CHECK(PersistenceModule::from_cubes(n, cubes).validate().ok());
        }
    }
}

TEST_CASE("rank between grid points") {
    PersistenceModule m = interval_module(0, 2);
    CHECK(m.rank_between({0}, {2}) == 1);
    CHECK(m.rank_between({0}, {3}) == 0);  // target outside support
    CHECK(m.rank_between({1}, {0}) == 0);  // not ordered

    auto two = PersistenceModule::from_cubes(1, {{CubeSpec({0}, {2}), 1}, {CubeSpec({1}, {3}), 1}});
    CHECK(two.rank_between({1}, {2}) == 2);

    SUBCASE("invalid module is refused") {
        PersistenceModule bad{GridBox({0, 0}, {1, 1})};
        std::fill(bad.dims.begin(), bad.dims.end(), 1);
        IntMatrix one = IntMatrix::identity(1);
        IntMatrix two_m(1, 1);
        two_m.at(0, 0) = 2;
        bad.maps[0][static_cast<size_t>(bad.box.index_of({0, 0}))] = one;
        bad.maps[1][static_cast<size_t>(bad.box.index_of({0, 0}))] = one;
        bad.maps[1][static_cast<size_t>(bad.box.index_of({1, 0}))] = one;
        bad.maps[0][static_cast<size_t>(bad.box.index_of({0, 1}))] = two_m;
        CHECK_THROWS_WITH_AS(bad.rank_between({0, 0}, {1, 1}), "invalid module", std::invalid_argument);
    }
}

TEST_CASE("rank with real arguments floors the source and ceils the target") {
    PersistenceModule m = interval_module(0, 2);
    CHECK(m.rank_between_real({0.5}, {1.5}) == 1);  // probes (0, 2)
    CHECK(m.rank_between_real({1.0}, {0.9}) == 0);
    CHECK(m.rank_between_real({1.0}, {1.0}) == 1);  // identity on M_1
}

TEST_CASE("rank table matches the interval-counting oracle") {
    std::vector<std::pair<CubeSpec, int>> cubes{{CubeSpec({0}, {2}), 1}, {CubeSpec({1}, {3}), 1}};
    auto m = PersistenceModule::from_cubes(1, cubes);
    RankInvariant table = m.rank_table();
    CHECK(table.at({0}, {0}) == 1);
    CHECK(table.at({0}, {2}) == 1);
    CHECK(table.at({1}, {1}) == 2);
    CHECK(table.at({1}, {3}) == 1);
    CHECK(table.at({2}, {3}) == 1);
    CHECK(table.at({0}, {3}) == 0);

    SUBCASE("randomized modules, all pairs") {
        Rng rng(23);
        for (int t = 0; t < 20; ++t) {
            int n = rng.uniform(1, 2);
            auto cs = random_cube_list(rng, n, 0, 3, rng.uniform(1, 4), 2, false);
            auto mod = PersistenceModule::from_cubes(n, cs);
            RankInvariant tab = mod.rank_table();
            for (const auto& [key, val] : tab.values) CHECK(val == cube_count_rank(cs, key.first, key.second));
            for (const auto& u : mod.box.all_points())
                for (const auto& v : mod.box.all_points())
                    if (leq(u, v)) CHECK(tab.at(u, v) == cube_count_rank(cs, u, v));
        }
    }
}

TEST_CASE("zero module has an identically zero table") {
    PersistenceModule z = PersistenceModule::zero(GridBox({0, 0}, {2, 2}));
    CHECK(z.validate().ok());
    CHECK(z.rank_table().values.empty());
}

TEST_CASE("direct sums") {
    auto a = interval_module(0, 2);
    auto b = interval_module(1, 3);

    SUBCASE("zero module is neutral") {
        auto s = direct_sum(a, PersistenceModule::zero(GridBox({0}, {2})));
        CHECK(s.rank_table().same_values(a.rank_table()));
    }
    SUBCASE("matches the two-interval fixture") {
        auto s = direct_sum(a, b);
        auto direct = PersistenceModule::from_cubes(1, {{CubeSpec({0}, {2}), 1}, {CubeSpec({1}, {3}), 1}});
        CHECK(s.rank_table().same_values(direct.rank_table()));
    }
    SUBCASE("dims add pointwise and tables add pointwise") {
        Rng rng(37);
        for (int t = 0; t < 10; ++t) {
            int n = rng.uniform(1, 2);
            auto ca = random_cube_list(rng, n, 0, 3, rng.uniform(1, 3), 2, false);
            auto cb = random_cube_list(rng, n, 0, 3, rng.uniform(1, 3), 2, false);
            auto ma = PersistenceModule::from_cubes(n, ca);
            auto mb = PersistenceModule::from_cubes(n, cb);
            auto s = direct_sum(ma, mb);
            CHECK(s.validate().ok());
            for (const auto& p : s.box.all_points()) CHECK(s.dim_at(p) == ma.dim_at(p) + mb.dim_at(p));
            auto ta = ma.rank_table(), tb = mb.rank_table(), ts = s.rank_table();
            for (const auto& u : s.box.all_points())
                for (const auto& v : s.box.all_points())
                    if (leq(u, v)) CHECK(ts.at(u, v) == ta.at(u, v) + tb.at(u, v));
        }
    }
    SUBCASE("parameter count mismatch is an error") {
        CHECK_THROWS_AS(direct_sum(a, PersistenceModule::zero(GridBox({0, 0}, {1, 1}))), std::invalid_argument);
    }
}

TEST_CASE("composites are path independent on valid modules") {
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        int n = rng.uniform(2, 3);
        auto cubes = random_cube_list(rng, n, 0, 2, rng.uniform(1, 3), 2, false);
        auto m = general_random_module(rng, n, cubes);
        REQUIRE(m.validate().ok());
        std::vector<int> forward(n), backward(n);
        for (int i = 0; i < n; ++i) {
            forward[i] = i;
            backward[i] = n - 1 - i;
        }
        const Point &u = m.box.lo, &v = m.box.hi;
        CHECK(m.composite_map(u, v, forward) == m.composite_map(u, v, backward));
    }
}

TEST_CASE("rank is monotone under shrinking the pair") {
    Rng rng(43);
    for (int t = 0; t < 10; ++t) {
        int n = rng.uniform(1, 2);
        auto cubes = random_cube_list(rng, n, 0, 3, rng.uniform(1, 3), 2, false);
        auto m = general_random_module(rng, n, cubes);
        auto table = m.rank_table();
        auto pts = m.box.all_points();
        for (const auto& u : pts)
            for (const auto& v : pts) {
                if (!leq(u, v)) continue;
                for (const auto& u2 : pts)
                    for (const auto& v2 : pts)
                        if (leq(u, u2) && leq(u2, v2) && leq(v2, v))
                            CHECK(table.at(u2, v2) >= table.at(u, v));
            }
    }
}
