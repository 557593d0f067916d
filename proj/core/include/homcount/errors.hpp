#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcount {

class HomcountError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. line() is 1-based; 0 when not tied to a line.
class ParseError : public HomcountError {
public:
    ParseError(std::size_t line, const std::string &message);
    [[nodiscard]] auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public HomcountError {
public:
    using HomcountError::HomcountError;
};

/// Pattern or oracle host exceeds a configured size limit.
class SizeLimitError : public HomcountError {
public:
    using HomcountError::HomcountError;
};

/// Brute-force search exceeded its node budget.
class BudgetExceeded : public HomcountError {
public:
    using HomcountError::HomcountError;
};

/// An internal cross-check failed; always indicates a counting bug.
class ConsistencyError : public HomcountError {
public:
    using HomcountError::HomcountError;
};

} // namespace homcount
