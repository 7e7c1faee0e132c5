#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "pebble/errors.hpp"

namespace pebble {

/// Extended nonnegative move count: a finite value in [0, 2^63-1] or infinity.
///
/// Infinity is stored as a sentinel above every finite value, so the defaulted
/// ordering already treats it as the top element. Addition is checked.
class Cost {
public:
    using value_type = std::uint64_t;
    static constexpr value_type max_finite = static_cast<value_type>(std::numeric_limits<std::int64_t>::max());

    constexpr Cost() noexcept = default;

    static constexpr Cost finite(value_type v) {
        if (v > max_finite) throw OverflowError("cost " + std::to_string(v) + " exceeds 2^63-1");
        return Cost(v);
    }
    static constexpr Cost infinity() noexcept { return Cost(kInfinity); }

    constexpr bool is_finite() const noexcept { return raw_ != kInfinity; }
    constexpr bool is_infinite() const noexcept { return raw_ == kInfinity; }

    value_type value() const {
        if (is_infinite()) throw DomainError("value() called on an infinite cost");
        return raw_;
    }

    std::string to_string() const { return is_finite() ? std::to_string(raw_) : std::string("inf"); }

    friend constexpr auto operator<=>(Cost, Cost) noexcept = default;

    friend constexpr Cost operator+(Cost a, Cost b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        // both operands <= 2^63-1, so the raw sum cannot wrap
        return finite(a.raw_ + b.raw_);
    }

    Cost& operator+=(Cost other) { return *this = *this + other; }

    friend std::ostream& operator<<(std::ostream& os, Cost c) { return os << c.to_string(); }

private:
    static constexpr value_type kInfinity = std::numeric_limits<value_type>::max();
    constexpr explicit Cost(value_type raw) noexcept : raw_(raw) {}

    value_type raw_ = 0;
};

}  // namespace pebble
