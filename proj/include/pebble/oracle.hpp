#pragma once

// Breadth-first search over every board configuration. Exponential in n and
// kept independent of the recursion in dp.hpp so it can serve as ground truth.

#include <cstdint>
#include <optional>

#include "pebble/cost.hpp"
#include "pebble/dp.hpp"
#include "pebble/strategy.hpp"

namespace pebble::oracle {

inline constexpr std::int64_t kMaxSquares = 20;

/// Shortest legal move count from the empty board to {s_n} never holding more
/// than S pebbles. Throws InstanceTooLargeError for n > 20.
Cost bfs_min_time(GameSize size);

/// A shortest witness, or nullopt when {s_n} is unreachable.
std::optional<Strategy> bfs_path(GameSize size);

}  // namespace pebble::oracle
