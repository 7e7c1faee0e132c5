#include "pebble/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pebble/analysis.hpp"
#include "pebble/config.hpp"
#include "pebble/dp.hpp"
#include "pebble/oracle.hpp"
#include "pebble/strategy.hpp"
#include "pebble/text_format.hpp"

namespace pebble::cli {

namespace {

struct Options {
    std::string config_path;
    std::optional<std::size_t> cell_budget;
    std::optional<std::size_t> max_moves;

    std::int64_t n = 1;
    std::int64_t pebbles = 0;
    std::int64_t nmax = 1;
    std::int64_t smax = 1;
    std::int64_t kmax = 0;
    double step = 0.01;
    std::string table_format = "plain";
    std::string emit = "moves";
    bool verify = false;
    bool witness = false;
};

Limits resolve_limits(const Options& opt) {
    Limits limits;
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') limits = load_limits(env, limits);
    if (!opt.config_path.empty()) limits = load_limits(opt.config_path, limits);
    if (opt.cell_budget) limits.cell_budget = *opt.cell_budget;
    if (opt.max_moves) limits.max_moves = *opt.max_moves;
    return limits;
}

std::string cell(std::int64_t n, std::int64_t s) {
    return "(" + std::to_string(n) + "," + std::to_string(s) + ")";
}

void write_summary(std::ostream& out, const VerificationReport& report) {
    out << "T=" << report.step_count << " peak=" << report.peak_pebbles << " valid=" << (report.valid ? "true" : "false")
        << '\n';
}

int cmd_cost(const Options& opt, const Limits& limits, std::ostream& out) {
    const GameSize size{opt.n, opt.pebbles};
    size.validate();
    if (!is_solvable(size)) {
        out << "F" << cell(size.n, size.pebbles) << " = inf\n";
        return kUnsolvable;
    }
    // budgets above n change neither F nor the split point
    const std::int64_t s = std::min(size.pebbles, size.n);
    const DpTables tables = build_table(size.n, s, limits.cell_budget);
    out << "F" << cell(size.n, size.pebbles) << " = " << tables.f(size.n, s) << '\n';
    if (size.n >= 2) out << "m" << cell(size.n, size.pebbles) << " = " << tables.m(size.n, s) << '\n';
    return kOk;
}

int cmd_table(const Options& opt, const Limits& limits, std::ostream& out) {
    const DpTables tables = build_table(opt.nmax, opt.smax, limits.cell_budget);

    if (opt.table_format == "plain") {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"n\\S"};
        for (std::int64_t s = 1; s <= tables.smax(); ++s) header.push_back(std::to_string(s));
        rows.push_back(std::move(header));
        for (std::int64_t n = 1; n <= tables.nmax(); ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (std::int64_t s = 1; s <= tables.smax(); ++s) row.push_back(tables.f(n, s).to_string());
            rows.push_back(std::move(row));
        }
        std::vector<std::size_t> width(rows.front().size(), 0);
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out << ' ';
                out << std::setw(static_cast<int>(width[c])) << row[c];
            }
            out << '\n';
        }
        return kOk;
    }

    const char sep = opt.table_format == "csv" ? ',' : '\t';
    out << 'n';
    for (std::int64_t s = 1; s <= tables.smax(); ++s) out << sep << "S=" << s;
    out << '\n';
    for (std::int64_t n = 1; n <= tables.nmax(); ++n) {
        out << n;
        for (std::int64_t s = 1; s <= tables.smax(); ++s) out << sep << tables.f(n, s);
        out << '\n';
    }
    return kOk;
}

int cmd_strategy(const Options& opt, const Limits& limits, std::ostream& out, std::ostream& err) {
    const GameSize size{opt.n, opt.pebbles};
    size.validate();
    if (!is_solvable(size)) {
        err << "unsolvable: F" << cell(size.n, size.pebbles) << " = inf\n";
        return kUnsolvable;
    }
    const std::int64_t s = std::min(size.pebbles, size.n);
    const DpTables tables = build_table(size.n, s, limits.cell_budget);

    if (opt.emit == "intervals") {
        const Strategy strategy = synthesize(tables, {size.n, s}, limits.max_moves);
        write_intervals(out, to_intervals(strategy));
        if (opt.verify) write_summary(out, verify(strategy, size.pebbles));
        return kOk;
    }

    std::optional<Replay> replay;
    if (opt.verify) replay.emplace(BoardState(size.n), size.pebbles);
    emit_strategy(tables, {size.n, s}, [&](const Move& mv) {
        write_move(out, mv);
        if (replay) replay->apply(mv);
    });
    if (replay) write_summary(out, replay->finish(BoardState::only_last(size.n)));
    return kOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
    const Strategy strategy(opt.n, parse_moves(in));
    const VerificationReport report = verify(strategy, opt.pebbles);
    write_summary(out, report);
    if (report.first_violation) {
        out << "violation rule=" << to_string(report.first_violation->rule) << " step=" << report.first_violation->step
            << '\n';
    }
    if (!report.nesting_violations.empty()) out << "nesting=" << report.nesting_violations.size() << '\n';
    return report.valid ? kOk : kRejected;
}

int cmd_oracle(const Options& opt, const Limits& limits, std::ostream& out) {
    const GameSize size{opt.n, opt.pebbles};
    const Cost bfs = oracle::bfs_min_time(size);
    CostSolver solver(limits.cell_budget);
    const Cost dp = solver.cost(size);
    out << "bfs=" << bfs << " dp=" << dp << ' ' << (bfs == dp ? "agree" : "disagree") << '\n';
    if (opt.witness) {
        if (auto path = oracle::bfs_path(size)) write_moves(out, *path);
    }
    return bfs == dp ? kOk : kRejected;
}

int cmd_bounds(const Options& opt, const Limits& limits, std::ostream& out, std::ostream& err) {
    const std::int64_t s = opt.pebbles;
    if (s < 2) {
        err << "bounds: S >= 2 required\n";
        return kUsage;
    }
    const std::int64_t kmax = opt.kmax == 0 ? s - 1 : opt.kmax;
    if (kmax < 1 || kmax > s - 1) {
        err << "bounds: --kmax must lie in [1, S-1]\n";
        return kUsage;
    }
    std::int64_t nmax = static_cast<std::int64_t>(limits.cell_budget / static_cast<std::size_t>(s));
    if (s - 1 < 62) nmax = std::min(nmax, (std::int64_t{1} << (s - 1)) + 1);
    const DpTables tables = build_table(std::max<std::int64_t>(nmax, 1), s, limits.cell_budget);

    auto f_at = [&](std::uint64_t n) -> std::optional<Cost> {
        if (n > static_cast<std::uint64_t>(tables.nmax())) return std::nullopt;
        return tables.f(static_cast<std::int64_t>(n), s);
    };
    auto mark = [](std::optional<bool> ok) { return !ok ? "n/a" : (*ok ? "ok" : "FAIL"); };

    for (std::int64_t k = 1; k <= kmax; ++k) {
        const auto rec = analysis::threshold_record(k, s, tables);
        const auto lower_sum = analysis::f_bound_lower_sum(k, s);
        const auto upper_sum = analysis::f_bound_upper_sum(k, s);
        const auto f_lo = f_at(rec.x_lower);
        const auto f_up = f_at(rec.x_upper);

        std::optional<bool> sandwich;
        if (rec.x) sandwich = rec.x_lower <= static_cast<std::uint64_t>(*rec.x) && static_cast<std::uint64_t>(*rec.x) <= rec.x_upper;
        std::optional<bool> lower_ok;
        if (f_lo) lower_ok = *f_lo <= Cost::finite(lower_sum);
        std::optional<bool> upper_ok;
        if (f_up) upper_ok = *f_up >= Cost::finite(upper_sum);

        out << "k=" << k << " x_lower=" << rec.x_lower << " x=" << (rec.x ? std::to_string(*rec.x) : "beyond")
            << " x_upper=" << rec.x_upper << " sandwich=" << mark(sandwich) << " lower_sum=" << lower_sum
            << " F(x_lower)=" << (f_lo ? f_lo->to_string() : "beyond") << " lower_bound=" << mark(lower_ok)
            << " upper_sum=" << upper_sum << " F(x_upper)=" << (f_up ? f_up->to_string() : "beyond")
            << " upper_bound=" << mark(upper_ok) << '\n';
    }
    return kOk;
}

int cmd_tsmin(const Options& opt, const Limits& limits, std::ostream& out) {
    const auto rec = analysis::min_ts(opt.n, limits.cell_budget);
    out << "S=" << rec.best_pebbles << " F=" << rec.best_f << " TS=" << rec.product;
    if (rec.ratio) out << " ratio=" << std::fixed << std::setprecision(6) << *rec.ratio;
    out << '\n';
    return kOk;
}

int cmd_fgamma(const Options& opt, const Limits& limits, std::ostream& out, std::ostream& err) {
    const std::int64_t s = opt.pebbles;
    if (s < 2 || opt.step <= 0.0 || opt.step > 0.5) {
        err << "fgamma: need S >= 2 and 0 < --step <= 0.5\n";
        return kUsage;
    }
    std::int64_t nmax = static_cast<std::int64_t>(limits.cell_budget / static_cast<std::size_t>(s));
    if (s - 1 < 62) nmax = std::min(nmax, std::int64_t{1} << (s - 1));
    const DpTables tables = build_table(std::max<std::int64_t>(nmax, 1), s, limits.cell_budget);

    std::vector<double> gammas;
    for (int i = 1; opt.step * i <= 0.5 + 1e-12; ++i) gammas.push_back(std::min(0.5, opt.step * i));

    auto value = [](bool feasible, double v) {
        if (!feasible) return std::string("-");
        std::ostringstream os;
        os << std::fixed << std::setprecision(6) << v;
        return os.str();
    };
    out << "gamma H f(H,S) gamma+H diff Hs f(Hs,S) gamma+Hs diff\n";
    for (const auto& row : analysis::entropy_report(s, tables, gammas)) {
        out << value(true, row.gamma) << ' ' << value(true, row.h) << ' ' << value(row.upper_feasible, row.f_upper) << ' '
            << value(true, row.upper_bound) << ' ' << value(row.upper_feasible, row.f_upper - row.upper_bound) << ' '
            << value(true, row.h_scaled) << ' ' << value(row.lower_feasible, row.f_lower) << ' '
            << value(true, row.lower_bound) << ' ' << value(row.lower_feasible, row.f_lower - row.lower_bound) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact solver, strategy synthesizer and verifier for Bennett's pebble game", "pebble"};
    app.require_subcommand(1);
    app.add_option("--config", opt.config_path, "key=value config file (cell_budget, max_moves)");
    app.add_option("--cell-budget", opt.cell_budget, "maximum number of DP table cells");
    app.add_option("--max-moves", opt.max_moves, "materialization cap for strategies");

    auto* cost = app.add_subcommand("cost", "print F(n,S) and the split point m(n,S)");
    cost->add_option("n", opt.n)->required();
    cost->add_option("S", opt.pebbles)->required();

    auto* table = app.add_subcommand("table", "print the F table for n <= nmax, S <= smax");
    table->add_option("nmax", opt.nmax)->required()->check(CLI::PositiveNumber);
    table->add_option("smax", opt.smax)->required()->check(CLI::PositiveNumber);
    table->add_option("--format", opt.table_format)->check(CLI::IsMember({"plain", "csv", "tsv"}));

    auto* strategy = app.add_subcommand("strategy", "emit an optimal move sequence");
    strategy->add_option("n", opt.n)->required();
    strategy->add_option("S", opt.pebbles)->required();
    strategy->add_option("--emit", opt.emit)->check(CLI::IsMember({"moves", "intervals"}));
    strategy->add_flag("--verify", opt.verify, "append a replay summary line");

    auto* verify_cmd = app.add_subcommand("verify", "verify a move sequence read from standard input");
    verify_cmd->add_option("n", opt.n)->required();
    verify_cmd->add_option("S", opt.pebbles)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "breadth-first search ground truth (n <= 20)");
    oracle_cmd->add_option("n", opt.n)->required();
    oracle_cmd->add_option("S", opt.pebbles)->required();
    oracle_cmd->add_flag("--witness", opt.witness, "print a shortest move sequence");

    auto* bounds = app.add_subcommand("bounds", "threshold sandwich and summed F bounds");
    bounds->add_option("S", opt.pebbles)->required();
    bounds->add_option("--kmax", opt.kmax);

    auto* tsmin = app.add_subcommand("tsmin", "exact minimum time-space product");
    tsmin->add_option("n", opt.n)->required()->check(CLI::PositiveNumber);

    auto* fgamma = app.add_subcommand("fgamma", "entropy bound report over a gamma grid");
    fgamma->add_option("S", opt.pebbles)->required();
    fgamma->add_option("--step", opt.step);

    std::vector<std::string> argv_store{"pebble"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kUsage;
    }

    try {
        const Limits limits = resolve_limits(opt);
        if (cost->parsed()) return cmd_cost(opt, limits, out);
        if (table->parsed()) return cmd_table(opt, limits, out);
        if (strategy->parsed()) return cmd_strategy(opt, limits, out, err);
        if (verify_cmd->parsed()) return cmd_verify(opt, in, out);
        if (oracle_cmd->parsed()) return cmd_oracle(opt, limits, out);
        if (bounds->parsed()) return cmd_bounds(opt, limits, out, err);
        if (tsmin->parsed()) return cmd_tsmin(opt, limits, out);
        if (fgamma->parsed()) return cmd_fgamma(opt, limits, out, err);
    } catch (const UnsolvableError& e) {
        err << "error: " << e.what() << '\n';
        return kUnsolvable;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kRejected;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace pebble::cli
