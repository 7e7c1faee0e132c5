#include <doctest.h>

#include "pebble/dp.hpp"
#include "pebble/oracle.hpp"

using namespace pebble;

namespace {

Cost fin(Cost::value_type v) { return Cost::finite(v); }

}  // namespace

TEST_CASE("f_cost matches known values") {
    CostSolver solver;
    CHECK(solver.cost({1, 1}) == fin(1));
    CHECK(solver.cost({51, 7}) == fin(321));
    CHECK(solver.cost({64, 7}) == fin(531));
    CHECK(solver.cost({65, 7}).is_infinite());
    CHECK(solver.cost({100, 20}) == fin(359));
    CHECK(solver.cost({5, 5}) == fin(9));
    // frozen from the BFS oracle
    CHECK(solver.cost({4, 3}) == fin(9));
    CHECK(solver.cost({8, 4}) == fin(25));
}

TEST_CASE("zero and one pebble") {
    CostSolver solver;
    CHECK(solver.cost({1, 0}).is_infinite());
    CHECK(solver.cost({7, 0}).is_infinite());
    CHECK(solver.cost({2, 1}).is_infinite());
    CHECK(solver.cost({1, 1000000000}) == fin(1));
}

TEST_CASE("invalid sizes are rejected") {
    CostSolver solver;
    CHECK_THROWS_AS(solver.cost({0, 3}), DomainError);
    CHECK_THROWS_AS(solver.cost({3, -1}), DomainError);
    CHECK_THROWS_AS(build_table(0, 3), DomainError);
}

TEST_CASE("huge budgets only touch the layers they need") {
    CostSolver solver;
    CHECK(solver.cost({6, 1'000'000'000}) == fin(11));
    CHECK(solver.cells_used() < 32);
}

TEST_CASE("memoization respects the cell budget") {
    CostSolver solver(100);
    CHECK_THROWS_AS(solver.cost({200, 10}), ResourceError);
    CHECK_THROWS_AS(build_table(1000, 1000, 10'000), ResourceError);
}

TEST_CASE("split_point is the least minimizer") {
    CostSolver solver;
    CHECK(solver.split_point({4, 3}) == 2);
    CHECK(solver.split_point({2, 2}) == 1);
    CHECK(solver.split_point({5, 4}) == 1);
    CHECK_FALSE(solver.split_point({1, 4}).has_value());
    CHECK_FALSE(solver.split_point({5, 3}).has_value());
}

TEST_CASE("delta") {
    CostSolver solver;
    CHECK(solver.delta(0, 5) == fin(0));
    CHECK(solver.delta(-3, 5) == fin(0));
    CHECK(solver.delta(1, 3) == fin(2));
    CHECK(solver.delta(3, 3) == fin(4));
    CHECK(solver.delta(4, 3).is_infinite());
}

TEST_CASE("is_solvable follows the power-of-two frontier") {
    CHECK(is_solvable({64, 7}));
    CHECK_FALSE(is_solvable({65, 7}));
    CHECK(is_solvable({1, 1}));
    CHECK_FALSE(is_solvable({1, 0}));
    CHECK(is_solvable({1 << 20, 21}));
    CHECK_FALSE(is_solvable({(1 << 20) + 1, 21}));
    CHECK(is_solvable({INT64_MAX, 64}));
    CHECK(is_solvable({INT64_MAX, 1000}));
    CHECK_FALSE(is_solvable({INT64_MAX, 63}));
}

TEST_CASE("build_table base cases and layout") {
    const DpTables one = build_table(1, 1);
    CHECK(one.f(1, 1) == fin(1));
    CHECK(one.m(1, 1) == 0);

    const DpTables t = build_table(40, 8);
    for (std::int64_t s = 1; s <= 8; ++s) CHECK(t.f(1, s) == fin(1));
    for (std::int64_t n = 2; n <= 40; ++n) {
        CHECK(t.f(n, 1).is_infinite());
        CHECK(t.f(n, 0).is_infinite());
        CHECK(t.m(n, 1) == 0);
    }
    CHECK(t.m(0, 5) == 0);
    CHECK_THROWS_AS(t.f(41, 1), ResourceError);
    CHECK_THROWS_AS(t.f(1, 9), ResourceError);
    CHECK_THROWS_AS(t.delta(40, 3), ResourceError);
}

TEST_CASE("build_table agrees with the memoized recursion cell for cell") {
    const DpTables t = build_table(200, 12);
    CostSolver solver;
    for (std::int64_t s = 1; s <= 12; ++s) {
        for (std::int64_t n = 1; n <= 200; ++n) {
            REQUIRE(t.f(n, s) == solver.cost({n, s}));
            REQUIRE(t.m(n, s) == solver.split_point({n, s}).value_or(0));
        }
    }
}

TEST_CASE("split points beyond the board size do not change") {
    CostSolver solver;
    for (std::int64_t n = 2; n <= 30; ++n) {
        const DpTables t = build_table(n, n);
        for (std::int64_t s = n; s <= n + 5; ++s) {
            CHECK(solver.cost({n, s}) == t.f(n, n));
            CHECK(solver.split_point({n, s}) == t.m(n, n));
        }
    }
}

TEST_CASE("m-table structure") {
    const DpTables t = build_table(512, 12);
    for (std::int64_t s = 2; s <= 12; ++s) {
        for (std::int64_t n = 2; n <= 512; ++n) {
            if (t.f(n, s).is_infinite()) {
                CHECK(t.m(n, s) == 0);
                continue;
            }
            CHECK(t.m(n, s) >= 1);
            CHECK(t.m(n, s) <= n / 2);
            if (n + 1 <= 512 && t.f(n + 1, s).is_finite()) {
                const auto step = t.m(n + 1, s) - t.m(n, s);
                CHECK((step == 0 || step == 1));
            }
        }
    }
}

TEST_CASE("split-point advance and the two-sided Delta bounds") {
    const DpTables t = build_table(600, 11);
    for (std::int64_t s = 2; s <= 11; ++s) {
        for (std::int64_t n = 2; n + 1 < 600; ++n) {
            if (t.f(n, s).is_infinite()) break;
            const std::int64_t m = t.m(n, s);
            const Cost d = t.delta(n, s);

            // lower/upper neighbours of the least minimizer
            CHECK(t.delta(n - m, s - 1) > t.delta(m - 1, s) + t.delta(m - 1, s - 1));
            CHECK(t.delta(n - m - 1, s - 1) <= t.delta(m, s) + t.delta(m, s - 1));

            CHECK(t.delta(n - m - 1, s - 1) <= d);
            CHECK(d <= t.delta(n - m, s - 1));
            CHECK(t.delta(m - 1, s) + t.delta(m - 1, s - 1) <= d);
            CHECK(d <= t.delta(m, s) + t.delta(m, s - 1));

            CHECK(d == std::min(t.delta(n - m, s - 1), t.delta(m, s) + t.delta(m, s - 1)));
            if (t.f(n + 1, s).is_finite()) {
                const bool stay = t.delta(n - m, s - 1) <= t.delta(m, s) + t.delta(m, s - 1);
                CHECK(t.m(n + 1, s) == (stay ? m : m + 1));
            }
        }
    }
}

TEST_CASE("memoized recursion matches breadth-first search on small boards") {
    CostSolver solver;
    for (std::int64_t n = 1; n <= 10; ++n) {
        for (std::int64_t s = 0; s <= 10; ++s) {
            CHECK(solver.cost({n, s}) == oracle::bfs_min_time({n, s}));
        }
    }
}
