#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace homcount {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative integer of unbounded magnitude.
///
/// Values below 2^128 live inline; anything larger is promoted to a heap
/// allocated BigInt. Arithmetic never wraps. Subtraction below zero and
/// inexact division throw.
class Count {
public:
    Count() = default;
    Count(std::uint64_t value) : small_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Count(const BigInt &value);

    Count(const Count &other);
    Count(Count &&other) noexcept = default;
    auto operator=(const Count &other) -> Count &;
    auto operator=(Count &&other) noexcept -> Count & = default;
    ~Count() = default;

    /// Parses a decimal string; throws std::invalid_argument on anything else.
    static auto from_string(std::string_view text) -> Count;

    [[nodiscard]] auto to_string() const -> std::string;
    [[nodiscard]] auto to_big() const -> BigInt;
    [[nodiscard]] auto is_zero() const -> bool { return ! big_ && small_ == 0; }
    [[nodiscard]] auto fits_u64() const -> bool;
    /// Throws std::overflow_error when the value does not fit.
    [[nodiscard]] auto to_u64() const -> std::uint64_t;

    auto operator+=(const Count &rhs) -> Count &;
    auto operator*=(const Count &rhs) -> Count &;
    /// Throws std::domain_error when rhs > *this.
    auto operator-=(const Count &rhs) -> Count &;

    friend auto operator+(Count lhs, const Count &rhs) -> Count { return lhs += rhs; }
    friend auto operator*(Count lhs, const Count &rhs) -> Count { return lhs *= rhs; }
    friend auto operator-(Count lhs, const Count &rhs) -> Count { return lhs -= rhs; }

    /// Exact division. Throws std::domain_error on a zero divisor and
    /// ConsistencyError when the remainder is nonzero.
    [[nodiscard]] auto divide_exact(const Count &divisor) const -> Count;

    friend auto operator==(const Count &a, const Count &b) -> bool;
    friend auto operator<=>(const Count &a, const Count &b) -> std::strong_ordering;

private:
    __extension__ typedef unsigned __int128 u128;

    void normalise();

    u128 small_ = 0;
    std::unique_ptr<BigInt> big_;
};

auto operator<<(std::ostream &os, const Count &c) -> std::ostream &;

} // namespace homcount
