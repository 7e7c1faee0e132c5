#include "pebble/config.hpp"

#include <charconv>
#include <fstream>
#include <string_view>

namespace pebble {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Limits load_limits(const std::string& path, Limits base) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open config file " + path);

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;

        const auto where = path + ":" + std::to_string(line_no);
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) throw DomainError(where + ": expected key=value");
        const auto key = trim(view.substr(0, eq));
        const auto value = trim(view.substr(eq + 1));

        std::size_t parsed = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
            throw DomainError(where + ": '" + std::string(value) + "' is not a nonnegative integer");
        }
        if (key == "cell_budget") {
            base.cell_budget = parsed;
        } else if (key == "max_moves") {
            base.max_moves = parsed;
        } else {
            throw DomainError(where + ": unknown key '" + std::string(key) + "'");
        }
    }
    return base;
}

}  // namespace pebble
