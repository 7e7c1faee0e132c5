#pragma once

#include <cstddef>
#include <string>

#include "pebble/dp.hpp"
#include "pebble/strategy.hpp"

namespace pebble {

struct Limits {
    std::size_t cell_budget = kDefaultCellBudget;
    std::size_t max_moves = kDefaultMaxMoves;
};

inline constexpr const char* kConfigEnvVar = "PEBBLE_CONFIG";

/// Reads `key=value` lines (cell_budget, max_moves) over `base`. '#' starts a
/// comment; blank lines are skipped. Throws DomainError on unknown keys or
/// malformed values, ResourceError if the file cannot be opened.
Limits load_limits(const std::string& path, Limits base = {});

}  // namespace pebble
