#pragma once

// Derived quantities of F: the Delta thresholds x_{k,S}, their closed-form
// binomial bounds, the summed F bounds, the entropy-scaled exponent f(gamma,S)
// and the exact minimum time-space product.

#include <cstdint>
#include <optional>
#include <vector>

#include "pebble/cost.hpp"
#include "pebble/dp.hpp"

namespace pebble::analysis {

/// C(n, k) by Pascal's rule with checked 64-bit addition. 0 for k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Least n with Delta(n,S) > 2^k, or nullopt ("beyond table") when the
/// table ends before the threshold is witnessed.
std::optional<std::int64_t> x_threshold(std::int64_t k, std::int64_t pebbles, const DpTables& tables);

/// sum_{i=0}^{k} C(S-1, i). Requires S >= 2, k >= 0.
std::uint64_t x_lower(std::int64_t k, std::int64_t pebbles);

/// min(C(S+k-1, k), 2^(S-1)). Requires S >= 2, k >= 0.
std::uint64_t x_upper(std::int64_t k, std::int64_t pebbles);

/// sum_{i=0}^{k} C(S-1, i) 2^(i+1), an upper bound on F(x_lower(k,S), S).
std::uint64_t f_bound_lower_sum(std::int64_t k, std::int64_t pebbles);

/// sum_{i=0}^{k} C(S+i-2, i) (2^i + 1), a lower bound on F(x_upper(k,S), S).
std::uint64_t f_bound_upper_sum(std::int64_t k, std::int64_t pebbles);

struct ThresholdRecord {
    std::int64_t k = 0;
    std::int64_t pebbles = 0;
    std::optional<std::int64_t> x;  // nullopt: beyond table
    std::uint64_t x_lower = 0;
    std::uint64_t x_upper = 0;
};

ThresholdRecord threshold_record(std::int64_t k, std::int64_t pebbles, const DpTables& tables);

/// Binary entropy, base 2, with H(0) = H(1) = 0.
double entropy(double gamma);

/// (1/S) log2 F(floor(2^(gamma S)), S).
double f_gamma(double gamma, std::int64_t pebbles, const DpTables& tables);

struct TsRecord {
    std::int64_t n = 1;
    std::int64_t best_pebbles = 1;
    Cost best_f;
    std::uint64_t product = 0;
    std::optional<double> ratio;  // log2(product/n) / (2 sqrt(log2 n)); absent for n = 1
};

/// Smallest S with 2^(S-1) >= n.
std::int64_t min_pebbles(std::int64_t n);

/// Exact minimum of S * F(n,S) over S in [min_pebbles(n), n], smallest S on
/// ties. The scan stops once (2n-1) S cannot beat the best product, since
/// F(n,S) >= 2n-1 for every S. Throws ResourceError if the table ends first.
TsRecord min_ts(std::int64_t n, const DpTables& tables);

/// Same, building (and growing) its own table.
TsRecord min_ts(std::int64_t n, std::size_t cell_budget = kDefaultCellBudget);

struct EntropyRow {
    double gamma = 0;
    double h = 0;                                  // H(gamma)
    bool upper_feasible = false;                   // floor(2^(H S)) solvable and in table
    double f_upper = 0;                            // f(H(gamma), S)
    double upper_bound = 0;                        // gamma + H(gamma)
    double h_scaled = 0;                           // (1+gamma) H(gamma/(1+gamma))
    bool lower_feasible = false;
    double f_lower = 0;                            // f(h_scaled, S)
    double lower_bound = 0;                        // gamma + h_scaled
};

/// Finite-S evaluation of both entropy bounds over `gammas` (each in [0, 1/2]).
std::vector<EntropyRow> entropy_report(std::int64_t pebbles, const DpTables& tables, const std::vector<double>& gammas);

}  // namespace pebble::analysis
