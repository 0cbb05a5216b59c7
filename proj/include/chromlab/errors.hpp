#pragma once

#include <stdexcept>

namespace chromlab {

// Thrown when an exact solver or an enumeration refuses an input that
// exceeds its configured size guard, and for allocation-scale refusals.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed input data (DIMACS parsing).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a file cannot be opened, read, or written.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chromlab
