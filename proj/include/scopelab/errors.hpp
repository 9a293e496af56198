#pragma once

#include <stdexcept>
#include <string>

namespace scopelab {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: bad shapes, unnormalized input, broken
// invariants on constructed objects.  Messages name the violated check.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Iterative algorithm exceeded its iteration/sweep budget.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Mathematical domain violations (log of a singular matrix, measures on
// the wrong state class, non-embeddable distance geometry).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace scopelab
