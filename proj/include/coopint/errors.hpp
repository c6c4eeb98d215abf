#pragma once

#include <stdexcept>
#include <string>

namespace coopint {

struct CoopError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A declared size budget (player count, dimension, row count) was exceeded.
struct BudgetExceeded : CoopError {
    using CoopError::CoopError;
};

struct EmptyPolytope : CoopError {
    using CoopError::CoopError;
};

struct Unbounded : CoopError {
    using CoopError::CoopError;
};

struct PlayerCountMismatch : CoopError {
    using CoopError::CoopError;
};

struct DivisionByZeroInterval : CoopError {
    using CoopError::CoopError;
};

struct InvalidParameter : CoopError {
    using CoopError::CoopError;
};

// Malformed or inconsistent game file.
struct GameFileError : CoopError {
    using CoopError::CoopError;
};

} // namespace coopint
