#include "pebble/strategy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace pebble {

// --- BoardState -------------------------------------------------------------

BoardState::BoardState(std::int64_t n) {
    if (n < 1) throw DomainError("board size n must be >= 1, got " + std::to_string(n));
    occupied_.assign(static_cast<std::size_t>(n), false);
}

BoardState BoardState::only_last(std::int64_t n) {
    BoardState b(n);
    b.set(n, true);
    return b;
}

bool BoardState::contains(std::int64_t square) const {
    if (square < 1 || square > size()) return false;
    return occupied_[static_cast<std::size_t>(square - 1)];
}

void BoardState::set(std::int64_t square, bool value) {
    if (square < 1 || square > size()) {
        throw DomainError("square " + std::to_string(square) + " outside board of size " + std::to_string(size()));
    }
    const auto idx = static_cast<std::size_t>(square - 1);
    if (occupied_[idx] == value) return;
    occupied_[idx] = value;
    count_ += value ? 1 : -1;
}

std::vector<std::int64_t> BoardState::occupied() const {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i <= size(); ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

// --- Strategy ---------------------------------------------------------------

Strategy::Strategy(std::int64_t n, std::vector<Move> moves, Orientation orientation)
    : n_(n), moves_(std::move(moves)), orientation_(orientation) {
    if (n_ < 1) throw DomainError("board size n must be >= 1, got " + std::to_string(n_));
    std::int64_t count = orientation_ == Orientation::backward ? 1 : 0;
    peak_ = count;
    for (const Move& mv : moves_) {
        count += mv.kind == MoveKind::place ? 1 : -1;
        peak_ = std::max(peak_, count);
    }
}

BoardState Strategy::start_board() const {
    return orientation_ == Orientation::forward ? BoardState(n_) : BoardState::only_last(n_);
}

BoardState Strategy::target_board() const {
    return orientation_ == Orientation::forward ? BoardState::only_last(n_) : BoardState(n_);
}

// --- synthesis --------------------------------------------------------------

namespace {

struct Emitter {
    const DpTables& tables;
    const MoveSink& sink;
    int max_depth;

    // Plays the optimal (n, pebbles) solution on squares offset+1 .. offset+n,
    // or its time reversal when `backward` is set.
    void run(std::int64_t n, std::int64_t pebbles, std::int64_t offset, bool backward, int depth) const {
        if (depth > max_depth) {
            throw std::logic_error("strategy recursion deeper than " + std::to_string(max_depth));
        }
        if (n == 1) {
            sink(backward ? Move::remove(offset + 1) : Move::place(offset + 1));
            return;
        }
        const std::int64_t m = tables.m(n, pebbles);
        if (!backward) {
            run(m, pebbles, offset, false, depth + 1);
            run(n - m, pebbles - 1, offset + m, false, depth + 1);
            run(m, pebbles - 1, offset, true, depth + 1);
        } else {
            run(m, pebbles - 1, offset, false, depth + 1);
            run(n - m, pebbles - 1, offset + m, true, depth + 1);
            run(m, pebbles, offset, true, depth + 1);
        }
    }
};

}  // namespace

void emit_strategy(const DpTables& tables, GameSize size, const MoveSink& sink) {
    size.validate();
    if (!tables.covers(size.n, size.pebbles)) {
        throw ResourceError("tables do not cover (" + std::to_string(size.n) + "," + std::to_string(size.pebbles) + ")");
    }
    if (tables.f(size.n, size.pebbles).is_infinite()) {
        throw UnsolvableError("no solution for n=" + std::to_string(size.n) + " with S=" + std::to_string(size.pebbles));
    }
    // Each level either drops a pebble or at least halves n, and n <= 2^(S-1).
    const int max_depth = static_cast<int>(2 * size.pebbles + 2);
    Emitter{tables, sink, max_depth}.run(size.n, size.pebbles, 0, false, 0);
}

Strategy synthesize(const DpTables& tables, GameSize size, std::size_t max_moves) {
    size.validate();
    if (tables.covers(size.n, size.pebbles)) {
        const Cost total = tables.f(size.n, size.pebbles);
        if (total.is_finite() && total.value() > max_moves) {
            throw ResourceError("strategy has " + total.to_string() + " moves, above the materialization cap of " +
                                std::to_string(max_moves));
        }
    }
    std::vector<Move> moves;
    emit_strategy(tables, size, [&](const Move& mv) { moves.push_back(mv); });
    return Strategy(size.n, std::move(moves));
}

Strategy synthesize(GameSize size, std::size_t max_moves) {
    size.validate();
    if (!is_solvable(size)) {
        throw UnsolvableError("no solution for n=" + std::to_string(size.n) + " with S=" + std::to_string(size.pebbles));
    }
    const std::int64_t pebbles = std::min(size.pebbles, size.n);
    return synthesize(build_table(size.n, pebbles), {size.n, pebbles}, max_moves);
}

Strategy reverse_strategy(const Strategy& strategy) {
    const auto report = verify(strategy, std::numeric_limits<std::int64_t>::max());
    if (!report.valid) {
        throw ValidationError("cannot reverse an invalid strategy: " + std::string(to_string(report.first_violation->rule)) +
                              " violation at step " + std::to_string(report.first_violation->step));
    }
    std::vector<Move> moves;
    moves.reserve(strategy.moves().size());
    for (auto it = strategy.moves().rbegin(); it != strategy.moves().rend(); ++it) moves.push_back(it->reversed());
    const auto flipped =
        strategy.orientation() == Orientation::forward ? Orientation::backward : Orientation::forward;
    return Strategy(strategy.n(), std::move(moves), flipped);
}

// --- verification -----------------------------------------------------------

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::initial: return "initial";
        case Rule::final: return "final";
        case Rule::add: return "add";
        case Rule::remove: return "remove";
        case Rule::occupancy: return "occupancy";
        case Rule::budget: return "budget";
    }
    return "unknown";
}

Replay::Replay(BoardState start, std::int64_t budget)
    : board_(std::move(start)), budget_(budget), peak_(board_.count()) {
    if (peak_ > budget_) first_violation_ = Violation{0, Rule::budget};
}

void Replay::fail(Rule rule) {
    if (!first_violation_) first_violation_ = Violation{steps_, rule};
    if (rule != Rule::budget) halted_ = true;
}

void Replay::apply(const Move& move) {
    ++steps_;
    if (halted_) return;
    const std::int64_t i = move.square;
    if (i < 1 || i > board_.size()) return fail(Rule::occupancy);
    const bool enabled = i == 1 || board_.contains(i - 1);
    if (move.kind == MoveKind::place) {
        if (board_.contains(i)) return fail(Rule::occupancy);
        if (!enabled) return fail(Rule::add);
        board_.set(i, true);
        peak_ = std::max(peak_, board_.count());
        if (board_.count() > budget_) fail(Rule::budget);
    } else {
        if (!board_.contains(i)) return fail(Rule::occupancy);
        if (!enabled) return fail(Rule::remove);
        board_.set(i, false);
    }
}

VerificationReport Replay::finish(const BoardState& target) const {
    VerificationReport report;
    report.step_count = steps_;
    report.peak_pebbles = peak_;
    report.first_violation = first_violation_;
    if (!halted_ && !(board_ == target) && !report.first_violation) {
        report.first_violation = Violation{steps_, Rule::final};
    }
    report.valid = !report.first_violation && report.peak_pebbles <= budget_;
    return report;
}

VerificationReport verify(const Strategy& strategy, std::int64_t budget) {
    Replay replay(strategy.start_board(), budget);
    for (const Move& mv : strategy.moves()) replay.apply(mv);
    VerificationReport report = replay.finish(strategy.target_board());

    const bool consistent = !report.first_violation || report.first_violation->rule == Rule::budget ||
                            report.first_violation->rule == Rule::final;
    if (consistent) report.nesting_violations = nesting_violations(to_intervals(strategy));
    return report;
}

// --- residence intervals ----------------------------------------------------

bool Interval::contains(const Interval& inner) const {
    if (inner.first < first) return false;
    if (!last) return true;
    return inner.last && *inner.last <= *last;
}

BoardState IntervalView::occupancy_at(std::int64_t step) const {
    BoardState board(n());
    for (std::int64_t i = 1; i <= n(); ++i) {
        for (const Interval& iv : square(i)) {
            if (iv.first <= step && (!iv.last || step <= *iv.last)) {
                board.set(i, true);
                break;
            }
        }
    }
    return board;
}

IntervalView to_intervals(const Strategy& strategy) {
    const std::int64_t n = strategy.n();
    IntervalView view(n);
    std::vector<std::optional<std::int64_t>> open(static_cast<std::size_t>(n));
    if (strategy.orientation() == Orientation::backward) open.back() = 0;

    std::int64_t step = 0;
    for (const Move& mv : strategy.moves()) {
        ++step;
        if (mv.square < 1 || mv.square > n) {
            throw ValidationError("step " + std::to_string(step) + ": square " + std::to_string(mv.square) +
                                  " outside the board");
        }
        auto& slot = open[static_cast<std::size_t>(mv.square - 1)];
        if (mv.kind == MoveKind::place) {
            if (slot) throw ValidationError("step " + std::to_string(step) + ": place on occupied square");
            slot = step;
        } else {
            if (!slot) throw ValidationError("step " + std::to_string(step) + ": remove from empty square");
            view.square(mv.square).push_back(Interval{*slot, step - 1});
            slot.reset();
        }
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        if (const auto& slot = open[static_cast<std::size_t>(i - 1)]) view.square(i).push_back(Interval{*slot, {}});
    }
    return view;
}

std::vector<NestingViolation> nesting_violations(const IntervalView& view) {
    std::vector<NestingViolation> out;
    for (std::int64_t i = 2; i <= view.n(); ++i) {
        const auto& outer = view.square(i);
        for (const Interval& inner : view.square(i - 1)) {
            // the only candidate is the last interval of s_i starting at or before inner.first
            auto it = std::upper_bound(outer.begin(), outer.end(), inner.first,
                                       [](std::int64_t t, const Interval& iv) { return t < iv.first; });
            if (it == outer.begin()) continue;
            if (std::prev(it)->contains(inner)) out.push_back({i - 1, inner});
        }
    }
    return out;
}

}  // namespace pebble
