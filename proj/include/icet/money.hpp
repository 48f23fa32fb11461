#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace icet {

// Monetary amounts held as integer cents so ledger sums never drift.
class Money {
public:
    constexpr Money() = default;
    static constexpr Money from_cents(std::int64_t c) { return Money(c); }
    static Money from_dollars(double d);

    // Parses "7.27", "$7.27", "10", "$1,000.50". Throws std::invalid_argument
    // on anything else (more than two decimals, stray characters, ...).
    static Money parse(const std::string& text);

    constexpr std::int64_t cents() const { return cents_; }
    double dollars() const { return static_cast<double>(cents_) / 100.0; }

    // "$80.00" / "-$0.50"
    std::string str() const;

    constexpr Money operator+(Money o) const { return Money(cents_ + o.cents_); }
    constexpr Money operator-(Money o) const { return Money(cents_ - o.cents_); }
    constexpr Money operator-() const { return Money(-cents_); }
    Money& operator+=(Money o) { cents_ += o.cents_; return *this; }
    Money& operator-=(Money o) { cents_ -= o.cents_; return *this; }
    constexpr auto operator<=>(const Money&) const = default;

private:
    explicit constexpr Money(std::int64_t c) : cents_(c) {}
    std::int64_t cents_ = 0;
};

} // namespace icet
