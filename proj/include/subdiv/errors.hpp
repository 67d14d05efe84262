#pragma once

#include <stdexcept>
#include <string>

namespace subdiv {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (digraph files, witness files, pattern strings).
struct ParseError : Error {
    ParseError(int line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    int line;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// Search budget exhausted before an exact answer was reached. Carries the
// bounds established so far; never a silent approximation.
struct BudgetError : Error {
    BudgetError(int lower, int upper, const std::string& what)
        : Error(what), lower_bound(lower), upper_bound(upper) {}
    int lower_bound;
    int upper_bound;
};

// A self-check failed: the library built an object it cannot verify.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace subdiv
