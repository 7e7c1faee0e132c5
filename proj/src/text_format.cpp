#include "pebble/text_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace pebble {

void write_move(std::ostream& os, const Move& move) {
    os << (move.kind == MoveKind::place ? '+' : '-') << move.square << '\n';
}

void write_moves(std::ostream& os, const Strategy& strategy) {
    for (const Move& mv : strategy.moves()) write_move(os, mv);
}

void write_intervals(std::ostream& os, const IntervalView& view) {
    for (std::int64_t i = 1; i <= view.n(); ++i) {
        os << 's' << i << ':';
        for (const Interval& iv : view.square(i)) {
            os << " [" << iv.first << ',';
            if (iv.last) {
                os << *iv.last << ']';
            } else {
                os << ')';
            }
        }
        os << '\n';
    }
}

std::vector<Move> parse_moves(std::istream& is) {
    std::vector<Move> moves;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto bad = [&] { return ValidationError("line " + std::to_string(line_no) + ": malformed move '" + line + "'"); };
        if (line.size() < 2 || (line[0] != '+' && line[0] != '-')) throw bad();
        if (line[1] < '0' || line[1] > '9') throw bad();
        std::int64_t square = 0;
        const char* first = line.data() + 1;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, square);
        if (ec != std::errc{} || ptr != last || square < 1) throw bad();
        moves.push_back(line[0] == '+' ? Move::place(square) : Move::remove(square));
    }
    return moves;
}

}  // namespace pebble
