#include "pebble/dp.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace pebble {

namespace {

std::string cell_name(std::int64_t n, std::int64_t pebbles) {
    return "(" + std::to_string(n) + "," + std::to_string(pebbles) + ")";
}

Cost checked_sum(Cost a, Cost b, Cost c, std::int64_t n, std::int64_t pebbles) {
    try {
        return a + b + c;
    } catch (const OverflowError&) {
        throw OverflowError("F" + cell_name(n, pebbles) + " overflows the 64-bit cost range");
    }
}

}  // namespace

void GameSize::validate() const {
    if (n < 1) throw DomainError("board size n must be >= 1, got " + std::to_string(n));
    if (pebbles < 0) throw DomainError("pebble budget S must be >= 0, got " + std::to_string(pebbles));
}

bool is_solvable(GameSize size) {
    size.validate();
    if (size.pebbles == 0) return false;
    if (size.pebbles - 1 >= 63) return true;
    return static_cast<std::uint64_t>(size.n) <= (std::uint64_t{1} << (size.pebbles - 1));
}

// --- CostSolver -------------------------------------------------------------

Cost CostSolver::lookup(std::int64_t n, std::int64_t pebbles) const {
    if (n == 1) return pebbles >= 1 ? Cost::finite(1) : Cost::infinity();
    if (pebbles <= 1) return Cost::infinity();
    return layers_.at(pebbles)[static_cast<std::size_t>(n - 1)];
}

void CostSolver::ensure(std::int64_t n, std::int64_t pebbles) {
    // Layer S up to n needs layer S-1 up to n-1, and so on down to a base case.
    std::vector<std::pair<std::int64_t, std::int64_t>> chain;
    for (; pebbles >= 2 && n >= 2; --pebbles, --n) {
        auto it = layers_.find(pebbles);
        if (it != layers_.end() && static_cast<std::int64_t>(it->second.size()) >= n) break;
        chain.emplace_back(pebbles, n);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) extend_layer(it->first, it->second);
}

void CostSolver::extend_layer(std::int64_t pebbles, std::int64_t n) {
    auto& layer = layers_[pebbles];
    const auto have = static_cast<std::int64_t>(layer.size());
    if (have >= n) return;
    const auto extra = static_cast<std::size_t>(n - have);
    if (cells_used_ + extra > cell_budget_) {
        throw ResourceError("memoizing F" + cell_name(n, pebbles) + " exceeds the cell budget of " +
                            std::to_string(cell_budget_));
    }
    cells_used_ += extra;
    layer.reserve(static_cast<std::size_t>(n));

    // absent only when n <= 2, where just F(1, S-1) is read
    const auto lower_it = layers_.find(pebbles - 1);
    const std::vector<Cost>* lower = lower_it != layers_.end() ? &lower_it->second : nullptr;
    auto below = [&](std::int64_t k) {
        if (k == 1) return Cost::finite(1);
        if (lower == nullptr) return Cost::infinity();
        return (*lower)[static_cast<std::size_t>(k - 1)];
    };

    for (std::int64_t k = have + 1; k <= n; ++k) {
        if (k == 1) {
            layer.push_back(Cost::finite(1));
            continue;
        }
        Cost best = Cost::infinity();
        for (std::int64_t m = 1; m < k; ++m) {
            const Cost first = layer[static_cast<std::size_t>(m - 1)];
            const Cost term = checked_sum(first, below(m), below(k - m), k, pebbles);
            best = std::min(best, term);
        }
        layer.push_back(best);
    }
}

Cost CostSolver::cost(GameSize size) {
    size.validate();
    ensure(size.n, size.pebbles);
    return lookup(size.n, size.pebbles);
}

std::optional<std::int64_t> CostSolver::split_point(GameSize size) {
    const Cost total = cost(size);
    if (size.n <= 1 || total.is_infinite()) return std::nullopt;
    for (std::int64_t m = 1; m < size.n; ++m) {
        const Cost term = lookup(m, size.pebbles) + lookup(m, size.pebbles - 1) + lookup(size.n - m, size.pebbles - 1);
        if (term == total) return m;
    }
    return std::nullopt;  // unreachable: the minimum is always attained
}

Cost CostSolver::delta(std::int64_t n, std::int64_t pebbles) {
    if (n <= 0) return Cost::finite(0);
    const Cost next = cost({n + 1, pebbles});
    if (next.is_infinite()) return next;
    return Cost::finite(next.value() - cost({n, pebbles}).value());
}

// --- DpTables ---------------------------------------------------------------

void DpTables::check_range(std::int64_t n, std::int64_t pebbles) const {
    if (!covers(n, pebbles)) {
        throw ResourceError("cell " + cell_name(n, pebbles) + " is outside the built table (nmax=" +
                            std::to_string(nmax_) + ", smax=" + std::to_string(smax_) + ")");
    }
}

std::size_t DpTables::index(std::int64_t n, std::int64_t pebbles) const {
    return static_cast<std::size_t>(pebbles - 1) * static_cast<std::size_t>(nmax_) + static_cast<std::size_t>(n - 1);
}

Cost DpTables::f(std::int64_t n, std::int64_t pebbles) const {
    check_range(n, pebbles);
    if (pebbles == 0) return Cost::infinity();
    return f_[index(n, pebbles)];
}

std::int64_t DpTables::m(std::int64_t n, std::int64_t pebbles) const {
    if (n <= 1) return 0;
    check_range(n, pebbles);
    if (pebbles <= 1) return 0;
    return m_[index(n, pebbles)];
}

Cost DpTables::delta(std::int64_t n, std::int64_t pebbles) const {
    if (n <= 0) return Cost::finite(0);
    const Cost next = f(n + 1, pebbles);
    if (next.is_infinite()) return next;
    return Cost::finite(next.value() - f(n, pebbles).value());
}

DpTables build_table(std::int64_t nmax, std::int64_t smax, std::size_t cell_budget) {
    if (nmax < 1 || smax < 1) throw DomainError("build_table needs nmax >= 1 and smax >= 1");
    if (static_cast<std::uint64_t>(nmax) > cell_budget / static_cast<std::uint64_t>(smax)) {
        throw ResourceError("table " + std::to_string(nmax) + "x" + std::to_string(smax) +
                            " exceeds the cell budget of " + std::to_string(cell_budget));
    }
    if (nmax > std::int64_t{UINT32_MAX}) throw ResourceError("nmax too large for the split-point table");

    DpTables t;
    t.nmax_ = nmax;
    t.smax_ = smax;
    t.f_.assign(static_cast<std::size_t>(nmax * smax), Cost::infinity());
    t.m_.assign(static_cast<std::size_t>(nmax * smax), 0);

    auto f = [&](std::int64_t n, std::int64_t s) { return t.f_[t.index(n, s)]; };

    t.f_[t.index(1, 1)] = Cost::finite(1);
    for (std::int64_t s = 2; s <= smax; ++s) {
        t.f_[t.index(1, s)] = Cost::finite(1);
        if (nmax < 2) continue;
        t.f_[t.index(2, s)] = Cost::finite(3);
        t.m_[t.index(2, s)] = 1;

        std::int64_t m = 1;
        for (std::int64_t n = 3; n <= nmax; ++n) {
            const Cost stay = checked_sum(f(m, s), f(m, s - 1), f(n - m, s - 1), n, s);
            const Cost advance = checked_sum(f(m + 1, s), f(m + 1, s - 1), f(n - m - 1, s - 1), n, s);
            Cost best = stay;
            if (advance < stay) {
                ++m;
                best = advance;
            }
            // Everything past the first infinite cell of a layer stays infinite.
            if (best.is_infinite()) break;
            t.f_[t.index(n, s)] = best;
            t.m_[t.index(n, s)] = static_cast<std::uint32_t>(m);
        }
    }
    return t;
}

}  // namespace pebble
