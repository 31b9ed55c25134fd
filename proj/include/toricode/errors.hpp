#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricode {

// Malformed polygon file (text or JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q is not a prime power.
struct NotPrimePowerError : std::domain_error {
    using std::domain_error::domain_error;
};

// q is a prime power but outside the supported construction range.
struct UnsupportedFieldError : std::domain_error {
    using std::domain_error::domain_error;
};

// Polygon does not fit inside [0, q-2]^2.
struct OutsideSquareError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exhaustive search refused: class count times row count exceeds the budget.
struct BudgetExceededError : std::runtime_error {
    BudgetExceededError(std::string msg, std::uint64_t classes)
        : std::runtime_error(std::move(msg)), scale_classes(classes) {}
    std::uint64_t scale_classes;
};

}  // namespace toricode
