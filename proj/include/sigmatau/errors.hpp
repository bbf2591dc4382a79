#pragma once

#include <stdexcept>
#include <string>

namespace sigmatau {

// Root of everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed curve specs, unknown formats, out-of-range flags.
struct ConfigError : Error {
    using Error::Error;
};

// Series truncation could not guarantee the requested order, or a
// composition/integration precondition failed.
struct TruncationError : Error {
    using Error::Error;
};

// The algebra contradicted itself: an inconsistent linear system, a ζ that
// survived reduction, a nonzero remainder in an exact division. These point
// at a convention bug upstream, never at user input.
struct InconsistencyError : Error {
    using Error::Error;
};

} // namespace sigmatau
