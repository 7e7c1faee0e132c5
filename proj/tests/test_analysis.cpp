#include <doctest.h>

#include <cmath>

#include "pebble/analysis.hpp"

using namespace pebble;
using namespace pebble::analysis;

namespace {

// independent multiplicative form, exact for the small arguments used here
std::uint64_t choose_product(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST_CASE("binomial") {
    for (std::int64_t n = 0; n <= 40; ++n) {
        for (std::int64_t k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == choose_product(n, k));
    }
    CHECK(binomial(67, 33) == 14226520737620288370ULL);
    CHECK_THROWS_AS(binomial(68, 34), OverflowError);
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial identity behind the summed lower bound") {
    for (std::int64_t s = 2; s <= 20; ++s) {
        for (std::int64_t k = 0; k <= 20; ++k) {
            std::uint64_t sum = 0;
            for (std::int64_t i = 0; i <= k; ++i) sum += binomial(s + i - 2, i);
            CHECK(binomial(s + k - 1, k) == sum);
        }
    }
}

TEST_CASE("closed-form threshold bounds") {
    CHECK(x_lower(1, 5) == 5);
    CHECK(x_lower(0, 9) == 1);
    CHECK(x_lower(3, 8) == 64);
    CHECK(x_upper(1, 5) == 5);
    CHECK(x_upper(10, 3) == 4);
    CHECK(x_upper(2, 6) == 21);
    CHECK(x_upper(1000, 3) == 4);
    CHECK(x_upper(3, 70) == binomial(72, 3));
    CHECK_THROWS_AS(x_lower(1, 1), DomainError);
    CHECK_THROWS_AS(x_upper(-1, 4), DomainError);
}

TEST_CASE("summed F bounds") {
    CHECK(f_bound_lower_sum(1, 2) == 6);
    CHECK(f_bound_lower_sum(1, 3) == 10);
    CHECK(f_bound_lower_sum(2, 3) == 18);
    CHECK(f_bound_upper_sum(1, 2) == 5);
    CHECK(f_bound_upper_sum(1, 3) == 8);
    CHECK(f_bound_upper_sum(2, 2) == 10);
    CHECK_THROWS_AS(f_bound_lower_sum(70, 80), OverflowError);
}

TEST_CASE("x_threshold") {
    const DpTables t = build_table(300, 9);
    CHECK(x_threshold(0, 5, t) == 1);
    CHECK(x_threshold(1, 3, t) == 3);
    CHECK(x_threshold(2, 1, t) == 1);
    for (std::int64_t s = 1; s <= 9; ++s) {
        CHECK(x_threshold(0, s, t) == 1);
        CHECK(x_threshold(1, s, t) == (s == 1 ? 1 : s));
        // threshold is always reached by the frontier 2^(S-1)
        CHECK(x_threshold(80, s, t) == (std::int64_t{1} << (s - 1)));
    }
    const DpTables small = build_table(20, 9);
    CHECK_FALSE(x_threshold(6, 9, small).has_value());
    CHECK_THROWS_AS(x_threshold(1, 10, small), ResourceError);
}

TEST_CASE("threshold recurrences and sandwich on a moderate table") {
    const DpTables t = build_table((1 << 11) + 1, 12);
    for (std::int64_t s = 2; s <= 12; ++s) {
        for (std::int64_t k = 0; k + 1 <= s - 1; ++k) {
            const auto rec = threshold_record(k + 1, s, t);
            REQUIRE(rec.x);
            CHECK(rec.x_lower <= static_cast<std::uint64_t>(*rec.x));
            CHECK(static_cast<std::uint64_t>(*rec.x) <= rec.x_upper);

            const auto up = *x_threshold(k + 1, s, t);
            const auto left = *x_threshold(k + 1, s - 1, t);
            const auto diag = *x_threshold(k, s - 1, t);
            const auto same = *x_threshold(k, s, t);
            CHECK(up >= left + diag);
            CHECK(up <= left + same);
            CHECK(up <= 2 * left);
        }
    }
}

TEST_CASE("summed F bounds against the table") {
    const DpTables t = build_table((1 << 11) + 1, 12);
    for (std::int64_t s = 2; s <= 12; ++s) {
        for (std::int64_t k = 1; k <= s - 1; ++k) {
            CHECK(t.f(static_cast<std::int64_t>(x_lower(k, s)), s) <= Cost::finite(f_bound_lower_sum(k, s)));

            // summing Delta > 2^i over [C(S+i-1,i), C(S+i,i+1)) gives this bound
            // whenever the binomial arm of x_upper is the smaller one
            const std::uint64_t y = binomial(s + k - 1, k);
            if (y > (std::uint64_t{1} << (s - 1))) continue;
            std::uint64_t bound = 1;
            for (std::int64_t j = 1; j <= k; ++j) bound += binomial(s + j - 2, j) * ((std::uint64_t{1} << (j - 1)) + 1);
            CHECK(t.f(static_cast<std::int64_t>(y), s) >= Cost::finite(bound));
        }
    }
}

TEST_CASE("entropy") {
    CHECK(entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == 0.0);
    CHECK(std::abs(entropy(0.25) - 0.8112781244591328) < 1e-12);
    CHECK_THROWS_AS(entropy(-0.1), DomainError);
    CHECK_THROWS_AS(entropy(1.5), DomainError);
    CHECK_THROWS_AS(entropy(std::nan("")), DomainError);

    const int steps = 1000;
    for (int i = 0; i <= steps; ++i) {
        const double g = static_cast<double>(i) / steps;
        CHECK(std::abs(entropy(g) - entropy(1.0 - g)) <= 1e-12);
        if (i > 0 && i < steps) {
            const double prev = entropy(static_cast<double>(i - 1) / steps);
            const double next = entropy(static_cast<double>(i + 1) / steps);
            CHECK(2.0 * entropy(g) >= prev + next - 1e-12);
        }
    }
}

TEST_CASE("f_gamma") {
    const DpTables t = build_table(2048, 12);
    CHECK(f_gamma(0.0, 7, t) == 0.0);
    CHECK(f_gamma(0.05, 12, t) == 0.0);  // floor(2^0.6) = 1
    CHECK(std::abs(f_gamma(0.5, 12, t) - 0.6543124201180047) < 1e-12);
    CHECK(t.f(64, 12) == Cost::finite(231));
    CHECK_THROWS_AS(f_gamma(1.0, 12, t), UnsolvableError);
    CHECK_THROWS_AS(f_gamma(0.5, 40, t), ResourceError);
    CHECK_THROWS_AS(f_gamma(-0.5, 4, t), DomainError);
}

TEST_CASE("min_pebbles") {
    CHECK(min_pebbles(1) == 1);
    CHECK(min_pebbles(2) == 2);
    CHECK(min_pebbles(4) == 3);
    CHECK(min_pebbles(5) == 4);
    CHECK(min_pebbles(1024) == 11);
    CHECK(min_pebbles(1025) == 12);
}

TEST_CASE("min_ts") {
    const auto one = min_ts(1);
    CHECK(one.best_pebbles == 1);
    CHECK(one.best_f == Cost::finite(1));
    CHECK(one.product == 1);
    CHECK_FALSE(one.ratio.has_value());

    const auto four = min_ts(4);
    CHECK(four.best_pebbles == 3);
    CHECK(four.best_f == Cost::finite(9));
    CHECK(four.product == 27);
    REQUIRE(four.ratio);
    CHECK(*four.ratio == doctest::Approx((std::log2(27.0) - 2.0) / (2.0 * std::sqrt(2.0))));

    // exhaustive over the full row versus the pruned scan
    for (std::int64_t n : {2, 3, 7, 33, 100, 257}) {
        const DpTables t = build_table(n, n);
        std::uint64_t best = UINT64_MAX;
        std::int64_t best_s = 0;
        for (std::int64_t s = 1; s <= n; ++s) {
            if (t.f(n, s).is_infinite()) continue;
            const auto p = t.f(n, s).value() * static_cast<std::uint64_t>(s);
            if (p < best) {
                best = p;
                best_s = s;
            }
        }
        const auto rec = min_ts(n, t);
        CHECK(rec.product == best);
        CHECK(rec.best_pebbles == best_s);
        CHECK(rec.product <= static_cast<std::uint64_t>((2 * n - 1) * n));
        const auto lo = min_pebbles(n);
        CHECK(rec.product <= t.f(n, lo).value() * static_cast<std::uint64_t>(lo));
        CHECK(min_ts(n).product == best);
    }
    CHECK_THROWS_AS(min_ts(100, build_table(100, 8)), ResourceError);
}

TEST_CASE("entropy report covers the feasible grid") {
    const DpTables t = build_table(1 << 15, 16);
    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) grid.push_back(i / 100.0);
    const auto rows = entropy_report(16, t, grid);
    REQUIRE(rows.size() == grid.size());
    CHECK(rows.front().upper_feasible);
    CHECK(rows.front().lower_feasible);
    CHECK_FALSE(rows.back().upper_feasible);
    for (const auto& r : rows) {
        if (r.upper_feasible) CHECK(std::isfinite(r.f_upper));
    }
    CHECK_THROWS_AS(entropy_report(16, t, {0.7}), DomainError);
}
