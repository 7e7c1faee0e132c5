#include "pebble/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace pebble::analysis {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in binomial arithmetic");
    return out;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in binomial arithmetic");
    return out;
}

std::uint64_t pow2(std::int64_t e) {
    if (e >= 64) throw OverflowError("2^" + std::to_string(e) + " exceeds 64 bits");
    return std::uint64_t{1} << e;
}

void require_bound_args(std::int64_t k, std::int64_t pebbles) {
    if (pebbles < 2) throw DomainError("bounds need S >= 2, got " + std::to_string(pebbles));
    if (k < 0) throw DomainError("bounds need k >= 0, got " + std::to_string(k));
}

std::optional<TsRecord> scan_ts(std::int64_t n, const DpTables& tables) {
    TsRecord best;
    best.n = n;
    bool found = false;
    const auto floor_cost = static_cast<std::uint64_t>(2 * n - 1);
    for (std::int64_t s = min_pebbles(n); s <= n; ++s) {
        if (found) {
            std::uint64_t reachable = 0;
            if (!__builtin_mul_overflow(floor_cost, static_cast<std::uint64_t>(s), &reachable) &&
                reachable >= best.product) {
                break;
            }
        }
        if (!tables.covers(n, s)) return std::nullopt;
        const Cost f = tables.f(n, s);
        const std::uint64_t product = mul(f.value(), static_cast<std::uint64_t>(s));
        if (!found || product < best.product) {
            found = true;
            best.best_pebbles = s;
            best.best_f = f;
            best.product = product;
        }
    }
    if (n > 1) {
        const double log_n = std::log2(static_cast<double>(n));
        best.ratio = (std::log2(static_cast<double>(best.product)) - log_n) / (2.0 * std::sqrt(log_n));
    }
    return best;
}

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw DomainError("binomial needs n, k >= 0");
    if (k > n) return 0;
    k = std::min(k, n - k);
    // row[j] = C(i, j) for j <= k; every entry is <= C(n, k) since k <= n/2
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k + 1), 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = std::min(i, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] = add(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j - 1)]);
        }
    }
    return row[static_cast<std::size_t>(k)];
}

std::optional<std::int64_t> x_threshold(std::int64_t k, std::int64_t pebbles, const DpTables& tables) {
    if (k < 0 || pebbles < 1) throw DomainError("x_threshold needs k >= 0 and S >= 1");
    if (pebbles > tables.smax()) throw ResourceError("S=" + std::to_string(pebbles) + " is outside the built table");
    for (std::int64_t n = 1; n + 1 <= tables.nmax(); ++n) {
        const Cost d = tables.delta(n, pebbles);
        if (d.is_infinite()) return n;
        if (k < 63 && d.value() > (std::uint64_t{1} << k)) return n;
    }
    return std::nullopt;
}

std::uint64_t x_lower(std::int64_t k, std::int64_t pebbles) {
    require_bound_args(k, pebbles);
    std::uint64_t sum = 0;
    for (std::int64_t i = 0; i <= std::min(k, pebbles - 1); ++i) sum = add(sum, binomial(pebbles - 1, i));
    return sum;
}

std::uint64_t x_upper(std::int64_t k, std::int64_t pebbles) {
    require_bound_args(k, pebbles);
    std::optional<std::uint64_t> choose;
    std::optional<std::uint64_t> cap;
    try {
        choose = binomial(pebbles + k - 1, k);
    } catch (const OverflowError&) {
    }
    if (pebbles - 1 < 64) cap = std::uint64_t{1} << (pebbles - 1);
    if (choose && cap) return std::min(*choose, *cap);
    if (choose) return *choose;
    if (cap) return *cap;
    throw OverflowError("x_upper(" + std::to_string(k) + "," + std::to_string(pebbles) + ") exceeds 64 bits");
}

std::uint64_t f_bound_lower_sum(std::int64_t k, std::int64_t pebbles) {
    require_bound_args(k, pebbles);
    std::uint64_t sum = 0;
    for (std::int64_t i = 0; i <= k; ++i) sum = add(sum, mul(binomial(pebbles - 1, i), pow2(i + 1)));
    return sum;
}

std::uint64_t f_bound_upper_sum(std::int64_t k, std::int64_t pebbles) {
    require_bound_args(k, pebbles);
    std::uint64_t sum = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
        sum = add(sum, mul(binomial(pebbles + i - 2, i), add(pow2(i), 1)));
    }
    return sum;
}

ThresholdRecord threshold_record(std::int64_t k, std::int64_t pebbles, const DpTables& tables) {
    return {k, pebbles, x_threshold(k, pebbles, tables), x_lower(k, pebbles), x_upper(k, pebbles)};
}

double entropy(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("entropy needs 0 <= gamma <= 1");
    if (gamma == 0.0 || gamma == 1.0) return 0.0;
    return -gamma * std::log2(gamma) - (1.0 - gamma) * std::log2(1.0 - gamma);
}

double f_gamma(double gamma, std::int64_t pebbles, const DpTables& tables) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("f_gamma needs a finite gamma >= 0");
    if (pebbles < 1) throw DomainError("f_gamma needs S >= 1");
    const double x = std::floor(std::exp2(gamma * static_cast<double>(pebbles)));
    if (x >= 9.2e18) throw ResourceError("f_gamma: required n = 2^" + std::to_string(gamma * pebbles) + " is too large");
    const auto n = static_cast<std::int64_t>(x);
    if (!is_solvable({n, pebbles})) {
        throw UnsolvableError("f_gamma: F(" + std::to_string(n) + "," + std::to_string(pebbles) + ") is infinite");
    }
    if (!tables.covers(n, pebbles)) {
        throw ResourceError("f_gamma: required n = " + std::to_string(n) + " is outside the built table");
    }
    return std::log2(static_cast<double>(tables.f(n, pebbles).value())) / static_cast<double>(pebbles);
}

std::int64_t min_pebbles(std::int64_t n) {
    if (n < 1) throw DomainError("n must be >= 1");
    return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(n - 1))) + 1;
}

TsRecord min_ts(std::int64_t n, const DpTables& tables) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (auto record = scan_ts(n, tables)) return *record;
    throw ResourceError("min_ts(" + std::to_string(n) + ") needs more pebble columns than the table's smax=" +
                        std::to_string(tables.smax()));
}

TsRecord min_ts(std::int64_t n, std::size_t cell_budget) {
    if (n < 1) throw DomainError("n must be >= 1");
    std::int64_t smax = std::min(n, 2 * min_pebbles(n));
    for (;;) {
        const DpTables tables = build_table(n, smax, cell_budget);
        if (auto record = scan_ts(n, tables)) return *record;
        smax = std::min(n, 2 * smax);
    }
}

std::vector<EntropyRow> entropy_report(std::int64_t pebbles, const DpTables& tables, const std::vector<double>& gammas) {
    auto try_f = [&](double exponent, bool& feasible) {
        try {
            const double v = f_gamma(exponent, pebbles, tables);
            feasible = true;
            return v;
        } catch (const UnsolvableError&) {
        } catch (const ResourceError&) {
        }
        feasible = false;
        return 0.0;
    };

    std::vector<EntropyRow> rows;
    rows.reserve(gammas.size());
    for (const double gamma : gammas) {
        if (!(gamma >= 0.0 && gamma <= 0.5)) throw DomainError("entropy report needs 0 <= gamma <= 1/2");
        EntropyRow row;
        row.gamma = gamma;
        row.h = entropy(gamma);
        row.upper_bound = gamma + row.h;
        row.f_upper = try_f(row.h, row.upper_feasible);
        row.h_scaled = (1.0 + gamma) * entropy(gamma / (1.0 + gamma));
        row.lower_bound = gamma + row.h_scaled;
        row.f_lower = try_f(row.h_scaled, row.lower_feasible);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pebble::analysis
