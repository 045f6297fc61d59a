#pragma once

#include <cstdint>
#include <string>

namespace evstore::analytics {

/// Exact decimal money in nano-dollars. Every per-use price in the cost
/// tables is an exact multiple of a nano-dollar per unit, so line items
/// come out as exact decimals; rounding happens only when a value is
/// reported in cents (round half up, matching the printed tables).
class Money {
public:
    constexpr Money() = default;

    static constexpr Money from_nanos(std::int64_t nanos) { return Money(nanos); }
    static Money from_dollars(double dollars); // rounds to the nearest nano

    constexpr std::int64_t nanos() const { return nanos_; }
    double dollars() const { return static_cast<double>(nanos_) / 1e9; }

    /// Dollars rounded half-up to cents (e.g. 30.149 -> 30.15).
    double rounded_cents() const;

    /// Shortest exact decimal representation with at least two decimals,
    /// e.g. "1.302", "35.00".
    std::string str() const;

    Money operator+(Money o) const { return Money(nanos_ + o.nanos_); }
    Money& operator+=(Money o) {
        nanos_ += o.nanos_;
        return *this;
    }
    /// Price-per-unit times an integer unit count; exact.
    Money operator*(std::int64_t count) const { return Money(nanos_ * count); }
    /// Price-per-unit times a fractional quantity; rounds to nearest nano.
    Money scaled(double quantity) const;

    auto operator<=>(const Money&) const = default;

private:
    constexpr explicit Money(std::int64_t nanos) : nanos_(nanos) {}

    std::int64_t nanos_ = 0;
};

} // namespace evstore::analytics
