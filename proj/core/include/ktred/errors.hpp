#ifndef KTRED_ERRORS_HPP
#define KTRED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ktred {

// Caller handed us something malformed: bad vertex id, missing edge,
// duplicate edge, invalid generator parameters.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A construction recipe is inconsistent with itself; the message names
// the failing step.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to run past its hard size guard.
struct oracle_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text parse failure for one of the file formats; the message carries
// the line number.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ktred

#endif
