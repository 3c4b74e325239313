#pragma once

#include <stdexcept>
#include <string>

namespace popdiff {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation's stated precondition does not hold (CLI exit code 2).
struct precondition_error : error {
    using error::error;
};

// A configured size/complexity cap was exceeded (CLI exit code 4).
struct cap_exceeded_error : error {
    using error::error;
};

// Internal consistency failure: a condition the math guarantees was violated.
struct defect_error : error {
    using error::error;
};

// Malformed input file or string (CLI exit code 1).
struct parse_error : error {
    using error::error;
};

} // namespace popdiff
