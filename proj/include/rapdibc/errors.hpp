#pragma once

#include <stdexcept>
#include <string>

namespace rapdibc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Array sizes in the input disagree with the declared n/m.
struct LengthMismatch : Error {
    using Error::Error;
};

// A lower bound exceeds its upper bound, or consecutive intervals overlap
// or touch (intervals must be strictly separated).
struct MalformedInterval : Error {
    using Error::Error;
};

// A value that must be finite (or integral, for integer instances) is not.
struct InvalidValue : Error {
    using Error::Error;
};

// Integer-mode operation applied to data that is not integer valued.
struct NonIntegralData : Error {
    using Error::Error;
};

// An enumeration oracle would exceed its configured work cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Instance generator did not produce an admissible instance within the
// allowed number of resampling attempts.
struct GenerationFailed : Error {
    using Error::Error;
};

// Malformed instance or solution file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace rapdibc
