#include "pebble/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>
#include <vector>

namespace pebble::oracle {

namespace {

constexpr std::uint32_t kUnseen = UINT32_MAX;

// Square i lives at bit i-1. Returns parent pointers; parent[start] = start.
std::vector<std::uint32_t> search(GameSize size) {
    size.validate();
    if (size.n > kMaxSquares) {
        throw InstanceTooLargeError("oracle supports n <= " + std::to_string(kMaxSquares) + ", got " +
                                    std::to_string(size.n));
    }
    const auto n = static_cast<int>(size.n);
    const std::uint32_t target = std::uint32_t{1} << (n - 1);
    std::vector<std::uint32_t> parent(std::size_t{1} << n, kUnseen);
    if (size.pebbles < 1) return parent;

    parent[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        const std::uint32_t state = queue.front();
        queue.pop_front();
        if (state == target) break;
        for (int bit = 0; bit < n; ++bit) {
            if (bit > 0 && !(state & (std::uint32_t{1} << (bit - 1)))) continue;
            const std::uint32_t next = state ^ (std::uint32_t{1} << bit);
            if (std::popcount(next) > size.pebbles || parent[next] != kUnseen) continue;
            parent[next] = state;
            queue.push_back(next);
        }
    }
    return parent;
}

}  // namespace

Cost bfs_min_time(GameSize size) {
    const auto parent = search(size);
    std::uint32_t state = std::uint32_t{1} << (size.n - 1);
    if (parent[state] == kUnseen) return Cost::infinity();
    Cost::value_type depth = 0;
    for (; state != 0; state = parent[state]) ++depth;
    return Cost::finite(depth);
}

std::optional<Strategy> bfs_path(GameSize size) {
    const auto parent = search(size);
    std::uint32_t state = std::uint32_t{1} << (size.n - 1);
    if (parent[state] == kUnseen) return std::nullopt;
    std::vector<Move> moves;
    for (; state != 0; state = parent[state]) {
        const std::uint32_t prev = parent[state];
        const auto square = static_cast<std::int64_t>(std::countr_zero(prev ^ state)) + 1;
        moves.push_back((state & ~prev) ? Move::place(square) : Move::remove(square));
    }
    std::reverse(moves.begin(), moves.end());
    return Strategy(size.n, std::move(moves));
}

}  // namespace pebble::oracle
