#pragma once

#include <stdexcept>
#include <string>

namespace sppde {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation at the jump abscissa x = d without a side selector.
struct MissingSideError : Error {
    using Error::Error;
};

/// (x, t) outside [0,1] x [0,T].
struct OutOfDomainError : Error {
    using Error::Error;
};

/// builtin_example() called with an id that is not 1 or 2.
struct UnknownExampleError : Error {
    using Error::Error;
};

/// Mesh interval count not a multiple of 4, or below 8.
struct BadNError : Error {
    using Error::Error;
};

/// Node index outside 0..N.
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

/// Forward-elimination pivot too small to divide by.
struct ZeroPivotError : Error {
    ZeroPivotError(const std::string& msg, int row_) : Error(msg), row(row_) {}
    int row;
};

/// The interface-row elimination divides by 2*eps -+ h*a; thrown when either
/// denominator is numerically zero.
struct SingularEliminationPivotError : Error {
    using Error::Error;
};

/// Wraps an assembly/solver failure with the time step it occurred in.
struct SolveStepError : Error {
    SolveStepError(const std::string& msg, int step_) : Error(msg), step(step_) {}
    int step;
};

} // namespace sppde
