#pragma once

#include <stdexcept>
#include <string>

namespace btr {

// Bad caller input: out-of-range ratios, dimension mismatches, malformed flags.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed external data: corpus lines, config files.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Store file failed magic/version/checksum/bounds validation. Distinct from
// NotFound so callers can tell a damaged file from a missing key.
struct CorruptStore : DataError {
    using DataError::DataError;
};

// Lookup key (passage id) absent from a healthy store.
struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal invariant; maps to exit code 3 in the CLI.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace btr
