#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpramsey {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A witness or certificate file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search would exceed (or has exceeded) its configured budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string & what, std::int64_t best_lower_bound = 0) :
        Error(what), best_lower_bound_(best_lower_bound)
    {
    }

    /// Longest valid coloring length established before giving up (0 when not applicable).
    auto best_lower_bound() const noexcept -> std::int64_t { return best_lower_bound_; }

private:
    std::int64_t best_lower_bound_;
};

/// Power iteration failed to reach the requested residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string & what, double best_residual) :
        Error(what), best_residual_(best_residual)
    {
    }

    auto best_residual() const noexcept -> double { return best_residual_; }

private:
    double best_residual_;
};

} // namespace gpramsey
