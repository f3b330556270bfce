#ifndef P5COLOR_ERRORS_HPP
#define P5COLOR_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace p5c {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad edge list, unparsable file, invalid argument.
struct InputError : Error {
    using Error::Error;
};

// A documented operation precondition does not hold (e.g. the graph turned
// out not to be P5-free, or a dominating-structure search came up empty).
struct PreconditionError : Error {
    using Error::Error;
};

// API misuse inside the library: a caller broke an internal contract.
struct ContractError : Error {
    using Error::Error;
};

// Wall-clock budget exceeded. Distinguishable from any verdict.
struct TimeoutError : Error {
    using Error::Error;
};

// The brute-force oracle refused an instance larger than its guard.
struct GuardError : Error {
    using Error::Error;
};

// P5 witness attached so callers can report the offending path.
struct NotP5FreeError : PreconditionError {
    std::array<int, 5> witness;
    NotP5FreeError(const std::string& msg, std::array<int, 5> path)
        : PreconditionError(msg), witness(path) {}
};

} // namespace p5c

#endif
