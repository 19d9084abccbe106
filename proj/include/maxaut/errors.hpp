#pragma once

#include <stdexcept>

namespace maxaut {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct MissingParameter : Error { using Error::Error; };
struct ConditionViolated : Error { using Error::Error; };
struct InvalidArgs : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };
struct NotAbelian : Error { using Error::Error; };
struct NotGeneratingPair : Error { using Error::Error; };
struct ResourceBudgetExceeded : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NotRegularData : Error { using Error::Error; };
struct UnknownFormat : Error { using Error::Error; };

}  // namespace maxaut
