#pragma once

// Exact minimum move counts F(n,S) for the pebble game and the least split
// points m(n,S) of the optimal decomposition.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pebble/cost.hpp"

namespace pebble {

inline constexpr std::size_t kDefaultCellBudget = 50'000'000;

/// Board of n squares played with at most `pebbles` pebbles.
struct GameSize {
    std::int64_t n = 1;
    std::int64_t pebbles = 0;

    /// Throws DomainError unless n >= 1 and pebbles >= 0.
    void validate() const;

    friend bool operator==(const GameSize&, const GameSize&) = default;
};

/// True iff n <= 2^(S-1). Never evaluates F.
bool is_solvable(GameSize size);

/// Memoized evaluation of the recursion
///   F(1,S) = 1 (S >= 1),  F(n,1) = F(n,0) = inf (n >= 2),
///   F(n,S) = min_{1<=m<n} F(m,S) + F(m,S-1) + F(n-m,S-1).
/// Every cell is a full scan over m; build_table is the fast bulk path.
class CostSolver {
public:
    explicit CostSolver(std::size_t cell_budget = kDefaultCellBudget) : cell_budget_(cell_budget) {}

    Cost cost(GameSize size);

    /// Least m attaining the minimum, or nullopt when n <= 1 or F is infinite.
    std::optional<std::int64_t> split_point(GameSize size);

    /// F(n+1,S) - F(n,S); 0 for n <= 0, infinite when F(n+1,S) is.
    Cost delta(std::int64_t n, std::int64_t pebbles);

    std::size_t cells_used() const noexcept { return cells_used_; }

private:
    Cost lookup(std::int64_t n, std::int64_t pebbles) const;
    void ensure(std::int64_t n, std::int64_t pebbles);
    void extend_layer(std::int64_t pebbles, std::int64_t n);

    std::size_t cell_budget_;
    std::size_t cells_used_ = 0;
    // layers_[S][n-1] = F(n,S) for S >= 2
    std::map<std::int64_t, std::vector<Cost>> layers_;
};

/// Dense F and m tables for 1 <= n <= nmax, 1 <= S <= smax.
/// Immutable after build_table returns.
class DpTables {
public:
    std::int64_t nmax() const noexcept { return nmax_; }
    std::int64_t smax() const noexcept { return smax_; }

    bool covers(std::int64_t n, std::int64_t pebbles) const noexcept {
        return n >= 1 && n <= nmax_ && pebbles >= 0 && pebbles <= smax_;
    }

    /// F(n,S). S = 0 is accepted and always infinite. Throws ResourceError outside the table.
    Cost f(std::int64_t n, std::int64_t pebbles) const;

    /// m(n,S), or 0 where undefined (n <= 1, S <= 1, or F infinite).
    std::int64_t m(std::int64_t n, std::int64_t pebbles) const;

    /// Needs n + 1 <= nmax when n > 0.
    Cost delta(std::int64_t n, std::int64_t pebbles) const;

private:
    friend DpTables build_table(std::int64_t, std::int64_t, std::size_t);

    std::size_t index(std::int64_t n, std::int64_t pebbles) const;
    void check_range(std::int64_t n, std::int64_t pebbles) const;

    std::int64_t nmax_ = 0;
    std::int64_t smax_ = 0;
    std::vector<Cost> f_;
    std::vector<std::uint32_t> m_;
};

/// Layer-by-layer construction tracking the split point: within a layer m
/// only ever stays or advances by one, so each cell compares two candidates.
/// Throws ResourceError when nmax * smax exceeds cell_budget.
DpTables build_table(std::int64_t nmax, std::int64_t smax, std::size_t cell_budget = kDefaultCellBudget);

}  // namespace pebble
