#pragma once

// Move sequences for the pebble game: synthesis of optimal strategies from
// the split-point tables, time reversal, replay verification, and the
// residence-interval view.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pebble/dp.hpp"

namespace pebble {

inline constexpr std::size_t kDefaultMaxMoves = 10'000'000;

enum class MoveKind : std::uint8_t { place, remove };

struct Move {
    MoveKind kind = MoveKind::place;
    std::int64_t square = 1;  // 1-based

    static Move place(std::int64_t i) { return {MoveKind::place, i}; }
    static Move remove(std::int64_t i) { return {MoveKind::remove, i}; }

    Move reversed() const { return {kind == MoveKind::place ? MoveKind::remove : MoveKind::place, square}; }

    friend bool operator==(const Move&, const Move&) = default;
};

using MoveSink = std::function<void(const Move&)>;

/// Occupied squares of an n-square board at one instant.
class BoardState {
public:
    explicit BoardState(std::int64_t n);

    static BoardState only_last(std::int64_t n);

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(occupied_.size()); }
    std::int64_t count() const noexcept { return count_; }
    bool contains(std::int64_t square) const;
    void set(std::int64_t square, bool value);
    std::vector<std::int64_t> occupied() const;

    friend bool operator==(const BoardState&, const BoardState&) = default;

private:
    std::vector<bool> occupied_;
    std::int64_t count_ = 0;
};

/// forward: empty board -> {s_n}. backward: {s_n} -> empty board (a
/// time-reversed solution).
enum class Orientation : std::uint8_t { forward, backward };

class Strategy {
public:
    Strategy(std::int64_t n, std::vector<Move> moves, Orientation orientation = Orientation::forward);

    std::int64_t n() const noexcept { return n_; }
    std::span<const Move> moves() const noexcept { return moves_; }
    Orientation orientation() const noexcept { return orientation_; }

    std::int64_t step_count() const noexcept { return static_cast<std::int64_t>(moves_.size()); }
    /// Largest pebble count over all prefixes, counting +1 per place and -1 per remove.
    std::int64_t peak_pebbles() const noexcept { return peak_; }

    BoardState start_board() const;
    BoardState target_board() const;

    friend bool operator==(const Strategy& a, const Strategy& b) {
        return a.n_ == b.n_ && a.orientation_ == b.orientation_ && a.moves_ == b.moves_;
    }

private:
    std::int64_t n_;
    std::vector<Move> moves_;
    Orientation orientation_;
    std::int64_t peak_ = 0;
};

/// Streams the deterministic optimal strategy for `size` into `sink`:
/// solve the first m squares with S pebbles, solve the remaining n-m squares
/// with S-1 pebbles while s_m stays occupied, then undo the m-square
/// solution for S-1 pebbles in reverse. m is the least split point.
/// Requires tables.covers(n, S). Throws UnsolvableError when F(n,S) is infinite.
void emit_strategy(const DpTables& tables, GameSize size, const MoveSink& sink);

/// Materialized form of emit_strategy. Throws ResourceError when F(n,S) > max_moves.
Strategy synthesize(const DpTables& tables, GameSize size, std::size_t max_moves = kDefaultMaxMoves);

/// Builds its own table. Budgets above n behave exactly like a budget of n.
Strategy synthesize(GameSize size, std::size_t max_moves = kDefaultMaxMoves);

/// Reverses move order and swaps place/remove. The input must replay
/// legally from its start board to its target board (ValidationError otherwise).
Strategy reverse_strategy(const Strategy& strategy);

// --- verification -----------------------------------------------------------

enum class Rule : std::uint8_t { initial, final, add, remove, occupancy, budget };

std::string_view to_string(Rule rule);

struct Violation {
    std::int64_t step = 0;  // 1-based move index; 0 for the start configuration
    Rule rule = Rule::occupancy;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Residence interval [first, last] over step indices. A pebble still on the
/// board after the final move has no `last`; one present before the first
/// move has first = 0.
struct Interval {
    std::int64_t first = 0;
    std::optional<std::int64_t> last;

    bool contains(const Interval& inner) const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct NestingViolation {
    std::int64_t square = 0;  // the square owning the nested interval
    Interval interval;
};

struct VerificationReport {
    bool valid = false;
    std::int64_t step_count = 0;
    std::int64_t peak_pebbles = 0;
    std::optional<Violation> first_violation;
    std::vector<NestingViolation> nesting_violations;
};

/// Incremental replay for streamed move sequences. Structural violations
/// (occupancy, add, remove) stop the replay; budget violations are recorded
/// and replay continues so the full peak is reported.
class Replay {
public:
    Replay(BoardState start, std::int64_t budget);

    void apply(const Move& move);
    VerificationReport finish(const BoardState& target) const;

    const BoardState& board() const noexcept { return board_; }

private:
    void fail(Rule rule);

    BoardState board_;
    std::int64_t budget_;
    std::int64_t steps_ = 0;
    std::int64_t peak_ = 0;
    bool halted_ = false;
    std::optional<Violation> first_violation_;
};

/// Replays from the strategy's start board and checks every move rule, the
/// target configuration and the pebble budget. Nesting of residence
/// intervals is reported but does not invalidate.
VerificationReport verify(const Strategy& strategy, std::int64_t budget);

// --- residence intervals ----------------------------------------------------

class IntervalView {
public:
    explicit IntervalView(std::int64_t n) : squares_(static_cast<std::size_t>(n)) {}

    std::int64_t n() const noexcept { return static_cast<std::int64_t>(squares_.size()); }
    const std::vector<Interval>& square(std::int64_t i) const { return squares_.at(static_cast<std::size_t>(i - 1)); }
    std::vector<Interval>& square(std::int64_t i) { return squares_.at(static_cast<std::size_t>(i - 1)); }

    /// Board after `step` moves.
    BoardState occupancy_at(std::int64_t step) const;

private:
    std::vector<std::vector<Interval>> squares_;
};

/// Throws ValidationError if the moves do not replay consistently.
IntervalView to_intervals(const Strategy& strategy);

/// Intervals of s_{i-1} contained in an interval of s_i.
std::vector<NestingViolation> nesting_violations(const IntervalView& view);

}  // namespace pebble
