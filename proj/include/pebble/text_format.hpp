#pragma once

// Line formats shared by the CLI and its consumers.
//
//   moves:      "+<i>\n" for a placement, "-<i>\n" for a removal
//   intervals:  "s<i>: [k1,l1] [k2,l2] ...\n", "[k,)" for an open interval

#include <iosfwd>
#include <vector>

#include "pebble/strategy.hpp"

namespace pebble {

void write_move(std::ostream& os, const Move& move);
void write_moves(std::ostream& os, const Strategy& strategy);
void write_intervals(std::ostream& os, const IntervalView& view);

/// Strict inverse of write_moves. Blank lines, whitespace and anything else
/// are rejected with a ValidationError naming the 1-based line number.
std::vector<Move> parse_moves(std::istream& is);

}  // namespace pebble
