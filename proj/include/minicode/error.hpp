#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minicode {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size guard refused the request (vector space too large to enumerate, etc.).
class GuardError : public Error {
public:
    using Error::Error;
};

/// The estimated number of field operations exceeds the configured budget.
class BudgetExceeded : public GuardError {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : GuardError("operation budget exceeded: need ~" + std::to_string(required) +
                     " field operations, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Malformed input documents (matrix, function, certificate files).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace minicode
