#include <homcount/count.hpp>
#include <homcount/errors.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace homcount {

namespace {

__extension__ typedef unsigned __int128 u128;

auto big_from_u128(u128 v) -> BigInt
{
    BigInt result = static_cast<std::uint64_t>(v >> 64);
    result <<= 64;
    result += static_cast<std::uint64_t>(v);
    return result;
}

const BigInt &u128_limit()
{
    static const BigInt limit = BigInt{1} << 128;
    return limit;
}

auto u128_to_string(u128 v) -> std::string
{
    if (v == 0)
        return "0";
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string &message) :
    HomcountError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
    line_(line)
{
}

Count::Count(const BigInt &value)
{
    if (value < 0)
        throw std::domain_error("Count cannot hold a negative value");
    big_ = std::make_unique<BigInt>(value);
    normalise();
}

Count::Count(const Count &other) :
    small_(other.small_),
    big_(other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr)
{
}

auto Count::operator=(const Count &other) -> Count &
{
    if (this != &other) {
        small_ = other.small_;
        big_ = other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr;
    }
    return *this;
}

auto Count::from_string(std::string_view text) -> Count
{
    if (text.empty() || ! std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a decimal count: '" + std::string(text) + "'");
    return Count{BigInt{std::string(text)}};
}

void Count::normalise()
{
    if (big_ && *big_ < u128_limit()) {
        u128 hi = static_cast<std::uint64_t>(*big_ >> 64);
        u128 lo = static_cast<std::uint64_t>(*big_ & BigInt{UINT64_MAX});
        small_ = (hi << 64) | lo;
        big_.reset();
    }
}

auto Count::to_big() const -> BigInt
{
    return big_ ? *big_ : big_from_u128(small_);
}

auto Count::to_string() const -> std::string
{
    return big_ ? big_->str() : u128_to_string(small_);
}

auto Count::fits_u64() const -> bool
{
    return ! big_ && small_ <= UINT64_MAX;
}

auto Count::to_u64() const -> std::uint64_t
{
    if (! fits_u64())
        throw std::overflow_error("count " + to_string() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(small_);
}

auto Count::operator+=(const Count &rhs) -> Count &
{
    if (! big_ && ! rhs.big_) {
        u128 sum;
        if (! __builtin_add_overflow(small_, rhs.small_, &sum)) {
            small_ = sum;
            return *this;
        }
    }
    big_ = std::make_unique<BigInt>(to_big() + rhs.to_big());
    normalise();
    return *this;
}

auto Count::operator*=(const Count &rhs) -> Count &
{
    if (! big_ && ! rhs.big_) {
        u128 product;
        if (! __builtin_mul_overflow(small_, rhs.small_, &product)) {
            small_ = product;
            return *this;
        }
    }
    big_ = std::make_unique<BigInt>(to_big() * rhs.to_big());
    normalise();
    return *this;
}

auto Count::operator-=(const Count &rhs) -> Count &
{
    if (*this < rhs)
        throw std::domain_error("Count subtraction would go negative: " + to_string() + " - " + rhs.to_string());
    if (! big_ && ! rhs.big_) {
        small_ -= rhs.small_;
        return *this;
    }
    big_ = std::make_unique<BigInt>(to_big() - rhs.to_big());
    normalise();
    return *this;
}

auto Count::divide_exact(const Count &divisor) const -> Count
{
    if (divisor.is_zero())
        throw std::domain_error("division of a Count by zero");
    if (! big_ && ! divisor.big_) {
        if (small_ % divisor.small_ != 0)
            throw ConsistencyError(to_string() + " is not divisible by " + divisor.to_string());
        Count result;
        result.small_ = small_ / divisor.small_;
        return result;
    }
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(to_big(), divisor.to_big(), quotient, remainder);
    if (remainder != 0)
        throw ConsistencyError(to_string() + " is not divisible by " + divisor.to_string());
    return Count{quotient};
}

auto operator==(const Count &a, const Count &b) -> bool
{
    if (! a.big_ && ! b.big_)
        return a.small_ == b.small_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    return false;
}

auto operator<=>(const Count &a, const Count &b) -> std::strong_ordering
{
    if (! a.big_ && ! b.big_)
        return a.small_ <=> b.small_;
    if (a.big_ && ! b.big_)
        return std::strong_ordering::greater;
    if (! a.big_ && b.big_)
        return std::strong_ordering::less;
    auto c = a.big_->compare(*b.big_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

auto operator<<(std::ostream &os, const Count &c) -> std::ostream &
{
    return os << c.to_string();
}

} // namespace homcount
