#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flowcat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A relation whose reflexive-transitive closure fails antisymmetry.
// `cycle` holds the element ids of one offending cycle, in order.
struct CycleError : Error {
    std::vector<std::string> cycle;
    CycleError(const std::string& msg, std::vector<std::string> cyc)
        : Error(msg), cycle(std::move(cyc)) {}
};

// A structure grew past its configured cap.
struct CapacityError : Error {
    using Error::Error;
};

struct NotMorseError : Error {
    using Error::Error;
};

struct TypeMismatchError : Error {
    using Error::Error;
};

struct LengthError : Error {
    using Error::Error;
};

// A relation that was supposed to be a partial order is not one.  Raised by
// construction-time verification; indicates a bug, never swallowed.
struct OrderViolationError : Error {
    using Error::Error;
};

struct EmptyComplexError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace flowcat
